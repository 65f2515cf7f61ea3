#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "plausible/agreement.hpp"
#include "plausible/algebra.hpp"
#include "plausible/proof.hpp"
#include "plausible/search.hpp"
#include "plausible/semantics.hpp"

namespace plausible {

/// Insertion-ordered so that documents keep their canonical key order.
using Json = nlohmann::ordered_json;

/// Parses JSON text; FormatError on malformed input.
Json parse_document(std::string_view text);

/// Canonical layout: one top-level key per line with a compact value;
/// top-level arrays of objects get one element per line. Ends in a newline.
std::string write_document(const Json& doc);

/// Whole file contents; FormatError if the file cannot be read.
std::string read_file(const std::string& path);

// Models: {"worlds": n, "S" | "R": ..., "V": {"p<k>": [...]}}. S keys are
// world indices in ascending order, each family sorted by bitmask. R is a list
// of [from, to] pairs in ascending order. Universal models carry neither.

Json world_set_to_json(WorldSet s);
Json model_to_json(const Model& m);
Model model_from_json(const Json& doc);
std::string model_to_text(const Model& m);
Model model_from_text(std::string_view text);

// Proofs: {"system", "premises", "lines": [{"formula", "rule", "schema"?,
// "binding"?, "refs"}], "conclusion"}.

Json proof_to_json(const Proof& p);
Proof proof_from_json(const Json& doc);
std::string proof_to_text(const Proof& p);
Proof proof_from_text(std::string_view text);

// Algebras: {"base": k, "sharp": [2^k images]}.

Json algebra_to_json(const FinitePlausibilityAlgebra& a);
FinitePlausibilityAlgebra algebra_from_json(const Json& doc);
FinitePlausibilityAlgebra algebra_from_text(std::string_view text);

// Reports

Json condition_report_to_json(const ConditionReport& r);
Json algebra_report_to_json(const AlgebraReport& r);
Json derived_laws_to_json(const DerivedLawsReport& r);
Json verdict_to_json(const Verdict& v);

/// {"formula", "class", "bounds": {"max_worlds", "atoms"}, "verdict",
///  "models_checked", "countermodel"?, "world"?}
Json experiment_report(const Formula& f, const SearchBounds& bounds, const SearchOutcome& outcome);

/// As experiment_report, with the premises listed under "gamma" after
/// "formula".
Json consequence_report(const std::vector<Formula>& gamma, const Formula& f,
                        const SearchBounds& bounds, const SearchOutcome& outcome);

/// {"class", "max_worlds", "algebras", "agreements", "disagreements", "rows"}
Json agreement_report_to_json(const AgreementReport& r);

}  // namespace plausible
