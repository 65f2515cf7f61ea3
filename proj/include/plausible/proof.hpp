#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plausible/error.hpp"
#include "plausible/formula.hpp"

namespace plausible {

/// Deductive systems known to the checker.
///
///   LPC     classical base only; rule MP
///   S5      base + T, 5, K, DfDia; rules MP, RN
///   LNabla  base + Ax1, Ax2, Ax3; rules MP, RNabla
///   LPBox   base + C, H, T, N; rules MP, RE
enum class SystemId { LPC, S5, LNabla, LPBox };

std::string_view system_name(SystemId s);
/// Accepts the names printed by system_name.
std::optional<SystemId> system_from_name(std::string_view name);
Dialect system_dialect(SystemId s);

struct NamedSchema {
  std::string id;
  Schema schema;
};

/// Classical base shared by every system: PL1..PL15.
const std::vector<NamedSchema>& lpc_schemas();

/// Axiom schemas of the system in documented order, base first.
const std::vector<NamedSchema>& list_axiom_schemas(SystemId s);

/// Theorem schemas that are not axioms of the system (S5: TDia, D, B, 4,
/// 4Dia, BDia, 5Dia, DfBox, M, N, C; LNabla: NablaI..NablaVI and HEquiv).
const std::vector<NamedSchema>& derived_schemas(SystemId s);

/// Axiom of `s` with the given id, if any.
std::optional<NamedSchema> find_axiom(SystemId s, std::string_view id);

struct AxiomMatch {
  std::string schema_id;
  MetaBinding binding;
};

/// First axiom schema of `s` (in documented order) that f instantiates.
/// Formulas outside the system's dialect never match.
std::optional<AxiomMatch> is_axiom_instance(SystemId s, const Formula& f);

// ---------------------------------------------------------------------------

enum class Rule { Premise, Axiom, MP, RE, RNabla, RN };

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

struct Justification {
  Rule rule = Rule::Premise;
  /// Axiom lines only; empty means "any axiom of the system".
  std::string schema_id;
  /// Axiom lines only; when present it must reproduce the line's formula.
  std::optional<MetaBinding> binding;
  /// 1-based indices of earlier lines. MP takes (minor, major) where the
  /// major premise is `minor -> this`; RE, RNabla and RN take one.
  std::vector<std::size_t> refs;
};

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct Proof {
  SystemId system = SystemId::LPC;
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;
  Formula conclusion = Top();
};

struct CheckOptions {
  /// Admit RE as a primitive rule of S5 (it is derivable there).
  bool s5_primitive_re = false;
};

struct Verdict {
  bool accepted = false;
  /// 1-based index of the first failing line; 0 when accepted.
  std::size_t failing_line = 0;
  std::string reason;
  /// Per line: depends on no premise.
  std::vector<bool> premise_free;
};

/// Checks every line in order. Rejections are reported in the verdict;
/// structural defects (empty proof, dangling or forward references, wrong
/// reference count) throw ProofFormatError.
Verdict check_proof(const Proof& p, const CheckOptions& options = {});

/// Appends lines to a proof, filling in consequent formulas for rule steps.
/// Line numbers are 1-based as in the file format. Nothing is checked here.
class ProofBuilder {
 public:
  explicit ProofBuilder(SystemId system, std::vector<Formula> premises = {});

  std::size_t premise(const Formula& f);
  std::size_t axiom(std::string schema_id, const Formula& f);
  /// Instantiates the named axiom of the builder's system.
  std::size_t axiom(std::string_view schema_id, const MetaBinding& binding);
  /// Line `major` must hold `minor -> X`; appends X.
  std::size_t mp(std::size_t minor, std::size_t major);
  /// Line `ref` holds A <-> B; appends []A <-> []B.
  std::size_t re(std::size_t ref);
  /// Line `ref` holds A -> B; appends nabla A -> nabla B.
  std::size_t rnabla(std::size_t ref);
  /// Appends [] of line `ref`.
  std::size_t rn(std::size_t ref);

  const Formula& formula(std::size_t line) const;
  std::size_t size() const { return lines_.size(); }
  SystemId system() const { return system_; }

  /// Concludes with the last line.
  Proof finish() const;

 private:
  std::size_t push(Formula f, Justification j);

  SystemId system_;
  std::vector<Formula> premises_;
  std::vector<ProofLine> lines_;
};

// Classical lemmas over the PL base. Each appends a derivation to the
// builder and returns the line holding the lemma.

/// |- a -> a
std::size_t derive_identity(ProofBuilder& b, const Formula& a);
/// From lines x -> y and y -> z, derive x -> z.
std::size_t derive_syllogism(ProofBuilder& b, std::size_t xy, std::size_t yz);
/// From lines a -> c and c -> a, derive a <-> c.
std::size_t derive_biconditional(ProofBuilder& b, std::size_t ac, std::size_t ca);
/// |- x -> true
std::size_t derive_implies_top(ProofBuilder& b, const Formula& x);

// ---------------------------------------------------------------------------
// Translation between LNabla and LPBox

class TranslationError : public Error {
 public:
  using Error::Error;
};

/// A source line whose justification became a derivation in the target.
struct Bridge {
  std::size_t source_line = 0;
  std::string kind;  // e.g. "Ax2 via N", "RNabla via RE+H"
  std::size_t first_line = 0;
  std::size_t last_line = 0;
};

struct ProofTranslation {
  Proof proof;
  std::vector<Bridge> bridges;
};

/// Maps an accepted LNabla proof to LPBox or back. Ax1/C, Ax3/T and the
/// classical base map one to one; Ax2, N, H, RNabla and RE are replaced by
/// derivations. Throws TranslationError for other systems or for proofs that
/// check_proof rejects.
ProofTranslation translate_proof_detailed(const Proof& p);
Proof translate_proof(const Proof& p);

}  // namespace plausible
