#include "plausible/agreement.hpp"

#include <algorithm>

namespace plausible {

std::size_t AgreementReport::agreements() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const AgreementRow& r) { return r.agree(); }));
}

AgreementReport run_agreement(const std::vector<Formula>& formulas, World max_worlds,
                              const SearchOptions& options) {
  std::vector<FinitePlausibilityAlgebra> algebras = valid_algebras(1);
  for (auto& a : valid_algebras(2)) algebras.push_back(std::move(a));

  AgreementReport report;
  report.max_worlds = max_worlds;
  for (const Formula& f : formulas) {
    AgreementRow row;
    if (admits(Dialect::NablaSystem, f)) {
      row.nabla_form = f;
      row.box_form = translate(f, Dialect::NablaSystem, Dialect::BoxSystem);
    } else {
      row.box_form = f;
      row.nabla_form = translate(f, Dialect::BoxSystem, Dialect::NablaSystem);
    }
    for (const auto& a : algebras) {
      ++row.algebras_checked;
      if (!alg_validates(a, row.nabla_form)) {
        row.algebra_valid = false;
        row.refuting_algebra = a;
        break;
      }
    }
    const std::set<AtomIndex> atoms = atoms_of(row.box_form);
    SearchBounds bounds{max_worlds, {atoms.begin(), atoms.end()}, ModelClass::ConstrainedNeighborhood};
    row.neighborhood = find_countermodel(row.box_form, bounds, options);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace plausible
