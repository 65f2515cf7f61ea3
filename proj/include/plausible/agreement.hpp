#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plausible/algebra.hpp"
#include "plausible/search.hpp"

namespace plausible {

/// One formula compared under both semantics: validity in every valid
/// plausibility algebra with base k <= 2, and bounded validity over
/// constrained neighborhood models.
struct AgreementRow {
  Formula nabla_form = Top();
  Formula box_form = Top();
  bool algebra_valid = true;
  std::size_t algebras_checked = 0;
  /// First refuting algebra in enumeration order (k = 1 first).
  std::optional<FinitePlausibilityAlgebra> refuting_algebra;
  SearchOutcome neighborhood;

  bool agree() const {
    return algebra_valid == (neighborhood.verdict == SearchVerdict::ExhaustedValid);
  }
};

struct AgreementReport {
  World max_worlds = 3;
  std::vector<AgreementRow> rows;

  std::size_t agreements() const;
  std::size_t disagreements() const { return rows.size() - agreements(); }
};

/// Accepts NablaSystem or BoxSystem formulas (Classical ones count as both).
/// Neighborhood atoms are the atoms of the formula.
AgreementReport run_agreement(const std::vector<Formula>& formulas, World max_worlds = 3,
                              const SearchOptions& options = {});

}  // namespace plausible
