#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plausible/error.hpp"
#include "plausible/io.hpp"

namespace py = pybind11;
using namespace plausible;

namespace {

std::string dump(const Json& doc) { return doc.dump(); }

Dialect dialect_named(const std::string& to) {
  if (to == "nabla") return Dialect::NablaSystem;
  if (to == "box") return Dialect::BoxSystem;
  throw FormatError("target must be 'nabla' or 'box'");
}

std::string search(const std::string& text, World max_worlds, const std::string& model_class,
                   std::optional<std::vector<AtomIndex>> atoms, unsigned threads) {
  const Formula f = parse(text);
  const auto c = model_class_from_name(model_class);
  if (!c) throw FormatError("unknown model class: " + model_class);
  SearchBounds b{max_worlds, {}, *c};
  if (atoms) {
    b.atoms = *atoms;
  } else {
    const auto used = atoms_of(f);
    b.atoms.assign(used.begin(), used.end());
  }
  return dump(experiment_report(f, b, find_countermodel(f, b, {threads})));
}

std::string algebra_report(const std::string& text) {
  const FinitePlausibilityAlgebra a = algebra_from_text(text);
  const AlgebraReport r = check_algebra(a);
  Json out;
  out["axioms"] = algebra_report_to_json(r);
  out["valid"] = r.valid();
  if (r.valid()) {
    out["plausible"] = plausible_elements(a);
    out["derived_laws"] = derived_laws_to_json(check_derived_laws(a));
  }
  return dump(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Formulas, neighborhood and Kripke semantics, proof checking and plausibility algebras";

  py::register_exception<Error>(m, "PlausibleError", PyExc_ValueError);

  m.def("render",
        [](const std::string& text) {
          const Formula f = parse(text);
          dialect_of(f);
          return render(f);
        },
        py::arg("formula"));
  m.def("dialect", [](const std::string& text) { return std::string(dialect_name(dialect_of(parse(text)))); },
        py::arg("formula"));
  m.def("translate",
        [](const std::string& text, const std::string& to) {
          const Dialect target = dialect_named(to);
          const Dialect source = target == Dialect::BoxSystem ? Dialect::NablaSystem : Dialect::BoxSystem;
          return render(translate(parse(text), source, target));
        },
        py::arg("formula"), py::arg("to"));
  m.def("evaluate",
        [](const std::string& model, World world, const std::string& text) {
          const Model mm = model_from_text(model);
          if (world >= world_count(mm)) throw RangeError("world out of range");
          return model_eval(mm, world, parse(text));
        },
        py::arg("model"), py::arg("world"), py::arg("formula"));
  m.def("supplement",
        [](const std::string& model) {
          const Model mm = model_from_text(model);
          const auto* nm = std::get_if<NeighborhoodModel>(&mm);
          if (nm == nullptr) throw FormatError("supplement needs a neighborhood model");
          const NeighborhoodModel plus = supplement(*nm);
          Json out;
          out["model"] = model_to_json(plus);
          out["before"] = condition_report_to_json(nm_check_conditions(*nm));
          out["after"] = condition_report_to_json(nm_check_conditions(plus));
          return dump(out);
        },
        py::arg("model"));
  m.def("find_countermodel", &search, py::arg("formula"), py::arg("max_worlds"),
        py::arg("model_class") = "constrained", py::arg("atoms") = py::none(), py::arg("threads") = 1u,
        py::call_guard<py::gil_scoped_release>());
  m.def("check_proof",
        [](const std::string& proof, bool s5_re) { return dump(verdict_to_json(check_proof(proof_from_text(proof), {s5_re}))); },
        py::arg("proof"), py::arg("s5_re") = false);
  m.def("translate_proof", [](const std::string& proof) { return dump(proof_to_json(translate_proof(proof_from_text(proof)))); },
        py::arg("proof"));
  m.def("check_algebra", &algebra_report, py::arg("algebra"));
  m.def("alg_validates",
        [](const std::string& algebra, const std::string& text) {
          return alg_validates(algebra_from_text(algebra), parse(text));
        },
        py::arg("algebra"), py::arg("formula"));
  m.def("k_experiment",
        [](World max_worlds, unsigned threads) {
          SearchBounds b{max_worlds, {0, 1}, ModelClass::ConstrainedNeighborhood};
          return dump(experiment_report(k_formula(), b, run_k_experiment(b, {threads})));
        },
        py::arg("max_worlds") = 3, py::arg("threads") = 1u, py::call_guard<py::gil_scoped_release>());
}
