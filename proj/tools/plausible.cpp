// plausible: command-line front end to the workbench.
//
// Exit status: 0 success, 1 negative finding (countermodel, rejected proof,
// violated condition, false evaluation), 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "plausible/agreement.hpp"
#include "plausible/io.hpp"

using namespace plausible;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string show(WorldSet s) {
  std::string out = "{";
  for (World w : s.to_vector()) out += (out.size() > 1 ? "," : "") + std::to_string(w);
  return out + "}";
}

void emit(const Json& doc) { std::cout << write_document(doc); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

ModelClass class_or_throw(const std::string& name) {
  auto c = model_class_from_name(name);
  if (!c) throw FormatError("unknown model class \"" + name + "\"");
  return *c;
}

std::vector<AtomIndex> parse_atoms(const std::string& spec) {
  std::vector<AtomIndex> atoms;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item.front() == 'p') item.erase(0, 1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError("bad atom \"" + item + "\" in --atoms");
    }
    atoms.push_back(static_cast<AtomIndex>(std::stoul(item)));
  }
  return atoms;
}

void pretty_model(const Model& m) {
  std::cout << "  worlds: " << world_count(m) << "\n";
  const Valuation* v = nullptr;
  if (const auto* nm = std::get_if<NeighborhoodModel>(&m)) {
    for (World w = 0; w < nm->world_count(); ++w) {
      std::cout << "  S(" << w << ") = {";
      bool first = true;
      for (WorldSet x : nm->neighborhoods(w)) {
        std::cout << (first ? "" : ", ") << show(x);
        first = false;
      }
      std::cout << "}\n";
    }
    v = &nm->valuation();
  } else if (const auto* km = std::get_if<KripkeModel>(&m)) {
    std::cout << "  R = {";
    bool first = true;
    for (const auto& [a, b] : km->pairs()) {
      std::cout << (first ? "" : ", ") << "(" << a << "," << b << ")";
      first = false;
    }
    std::cout << "}\n";
    v = &km->valuation();
  } else {
    v = &std::get<UniversalModel>(m).valuation();
  }
  for (const auto& [atom, set] : *v) std::cout << "  V(p" << atom << ") = " << show(set) << "\n";
}

void pretty_outcome(const SearchOutcome& out) {
  std::cout << verdict_name(out.verdict) << " after " << out.models_checked << " models\n";
  if (out.countermodel) {
    std::cout << "countermodel, refuted at world " << out.world << ":\n";
    pretty_model(*out.countermodel);
  }
}

void pretty_conditions(const char* label, const ConditionReport& r) {
  std::cout << label << ": c=" << r.c_holds << " h=" << r.h_holds << " t=" << r.t_holds
            << " n=" << r.n_holds << "\n";
  auto witness = [](const char* name, const std::optional<ConditionWitness>& w) {
    if (w) std::cout << "  (" << name << ") fails at world " << w->world << ", X=" << show(w->x)
                     << ", Y=" << show(w->y) << "\n";
  };
  witness("c", r.c_witness);
  witness("h", r.h_witness);
  witness("t", r.t_witness);
  witness("n", r.n_witness);
}

int search_status(const SearchOutcome& out) {
  return out.verdict == SearchVerdict::CountermodelFound ? kNegative : kOk;
}

struct SearchFlags {
  std::string model_class = "constrained";
  World max_worlds = 2;
  std::string atoms;
  std::uint64_t sample = 0;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--class", model_class, "raw | constrained | kripke-equiv | kripke-all | universal")
        ->capture_default_str();
    cmd->add_option("--max-worlds", max_worlds, "Largest world count searched")->capture_default_str();
    cmd->add_option("--atoms", atoms, "Comma-separated atom indices (default: atoms of the input)");
    cmd->add_option("--sample", sample, "Draw this many random models instead of enumerating");
    cmd->add_option("--seed", seed, "Seed for --sample");
    cmd->add_option("--threads", threads, "Worker threads for exhaustive search")->capture_default_str();
  }

  SearchBounds bounds(const std::set<AtomIndex>& default_atoms) const {
    SearchBounds b;
    b.max_worlds = max_worlds;
    b.model_class = class_or_throw(model_class);
    b.atoms = atoms.empty() ? std::vector<AtomIndex>(default_atoms.begin(), default_atoms.end())
                            : parse_atoms(atoms);
    return b;
  }

  void check_sampling() const {
    if (sample > 0 && !seed) throw FormatError("--sample requires --seed");
    if (seed && sample == 0) throw FormatError("--seed is only meaningful with --sample");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the logic of the plausible and related modal systems"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output");
  std::function<int()> run;

  // fmt
  std::string fmt_text;
  auto* fmt = app.add_subcommand("fmt", "Parse and print a formula in canonical form");
  fmt->add_option("formula", fmt_text)->required();
  fmt->callback([&] {
    run = [&] {
      const Formula f = parse(fmt_text);
      const Dialect d = dialect_of(f);
      if (pretty) {
        std::cout << render(f) << "\n" << "dialect: " << dialect_name(d) << "\n";
      } else {
        Json out;
        out["formula"] = render(f);
        out["dialect"] = dialect_name(d);
        emit(out);
      }
      return kOk;
    };
  });

  // eval
  std::string eval_file, eval_text, eval_class;
  World eval_world = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world of a model file");
  eval->add_option("model", eval_file)->required();
  eval->add_option("world", eval_world)->required();
  eval->add_option("formula", eval_text)->required();
  eval->add_option("--class", eval_class, "nm | km | um (default: from the file)");
  eval->callback([&] {
    run = [&] {
      Model m = model_from_text(read_file(eval_file));
      if (!eval_class.empty()) {
        const bool fits = (eval_class == "nm" && std::holds_alternative<NeighborhoodModel>(m)) ||
                          (eval_class == "km" && std::holds_alternative<KripkeModel>(m)) ||
                          (eval_class == "um" && std::holds_alternative<UniversalModel>(m));
        if (eval_class != "nm" && eval_class != "km" && eval_class != "um") {
          throw FormatError("--class must be nm, km or um");
        }
        if (!fits) throw FormatError("model file does not hold a " + eval_class + " model");
      }
      const Formula f = parse(eval_text);
      if (eval_world >= world_count(m)) {
        throw RangeError("world " + std::to_string(eval_world) + " out of range");
      }
      const bool value = model_eval(m, eval_world, f);
      if (pretty) {
        std::cout << render(f) << " at world " << eval_world << ": " << (value ? "true" : "false") << "\n";
      } else {
        Json out;
        out["formula"] = render(f);
        out["world"] = eval_world;
        out["value"] = value;
        emit(out);
      }
      return value ? kOk : kNegative;
    };
  });

  // valid
  std::string valid_text;
  SearchFlags valid_flags;
  auto* valid = app.add_subcommand("valid", "Search for a countermodel within bounds");
  valid->add_option("formula", valid_text)->required();
  valid_flags.attach(valid);
  valid->callback([&] {
    run = [&] {
      valid_flags.check_sampling();
      const Formula f = parse(valid_text);
      const SearchBounds b = valid_flags.bounds(atoms_of(f));
      const SearchOutcome out = valid_flags.sample > 0
                                    ? sample_countermodel(f, b, valid_flags.sample, *valid_flags.seed)
                                    : find_countermodel(f, b, {valid_flags.threads});
      if (pretty) {
        std::cout << render(f) << " over " << model_class_name(b.model_class) << " models, <= "
                  << b.max_worlds << " worlds\n";
        pretty_outcome(out);
      } else {
        emit(experiment_report(f, b, out));
      }
      return search_status(out);
    };
  });

  // consequence
  std::string cons_text;
  std::vector<std::string> cons_gamma;
  SearchFlags cons_flags;
  auto* cons = app.add_subcommand("consequence", "Search for a model validating gamma but refuting the formula");
  cons->add_option("formula", cons_text)->required();
  cons->add_option("--gamma,-g", cons_gamma, "Premise (repeatable)");
  cons_flags.attach(cons);
  cons->callback([&] {
    run = [&] {
      if (cons_flags.sample > 0) throw FormatError("consequence does not sample");
      const Formula f = parse(cons_text);
      std::vector<Formula> gamma;
      std::set<AtomIndex> atoms = atoms_of(f);
      for (const auto& g : cons_gamma) {
        gamma.push_back(parse(g));
        const auto more = atoms_of(gamma.back());
        atoms.insert(more.begin(), more.end());
      }
      const SearchBounds b = cons_flags.bounds(atoms);
      const SearchOutcome out = check_global_consequence(gamma, f, b, {cons_flags.threads});
      if (pretty) {
        pretty_outcome(out);
      } else {
        emit(consequence_report(gamma, f, b, out));
      }
      return search_status(out);
    };
  });

  // checkproof
  std::string proof_file;
  bool s5_re = false;
  auto* checkproof = app.add_subcommand("checkproof", "Check a proof file");
  checkproof->add_option("proof", proof_file)->required();
  checkproof->add_flag("--s5-re", s5_re, "Admit RE as a primitive rule of S5");
  checkproof->callback([&] {
    run = [&] {
      const Proof p = proof_from_text(read_file(proof_file));
      const Verdict v = check_proof(p, {s5_re});
      if (pretty) {
        if (v.accepted) {
          std::cout << "accepted: " << render(p.conclusion) << " in " << system_name(p.system) << "\n";
        } else {
          std::cout << "rejected at line " << v.failing_line << ": " << v.reason << "\n";
        }
      } else {
        emit(verdict_to_json(v));
      }
      return v.accepted ? kOk : kNegative;
    };
  });

  // translate
  std::string tr_input, tr_to;
  auto* tr = app.add_subcommand("translate", "Swap nabla and [] in a formula or proof file");
  tr->add_option("input", tr_input, "Formula, or path to a proof file")->required();
  tr->add_option("--to", tr_to, "nabla | box")->required()->check(CLI::IsMember({"nabla", "box"}));
  tr->callback([&] {
    run = [&] {
      const bool to_box = tr_to == "box";
      std::error_code ec;
      if (std::filesystem::is_regular_file(tr_input, ec)) {
        const Proof p = proof_from_text(read_file(tr_input));
        const SystemId expected = to_box ? SystemId::LNabla : SystemId::LPBox;
        if (p.system != expected) {
          throw FormatError("--to " + tr_to + " needs a " + std::string(system_name(expected)) + " proof");
        }
        const ProofTranslation t = translate_proof_detailed(p);
        if (pretty) {
          std::cout << system_name(t.proof.system) << " proof of " << render(t.proof.conclusion) << ", "
                    << t.proof.lines.size() << " lines\n";
          for (const Bridge& b : t.bridges) {
            std::cout << "  source line " << b.source_line << ": " << b.kind << " (lines " << b.first_line
                      << "-" << b.last_line << ")\n";
          }
        } else {
          emit(proof_to_json(t.proof));
        }
        return kOk;
      }
      const Formula f = parse(tr_input);
      const Formula g = to_box ? translate(f, Dialect::NablaSystem, Dialect::BoxSystem)
                               : translate(f, Dialect::BoxSystem, Dialect::NablaSystem);
      if (pretty) {
        std::cout << render(g) << "\n";
      } else {
        Json out;
        out["formula"] = render(g);
        out["dialect"] = dialect_name(to_box ? Dialect::BoxSystem : Dialect::NablaSystem);
        emit(out);
      }
      return kOk;
    };
  });

  // supplement
  std::string sup_file, sup_output;
  auto* sup = app.add_subcommand("supplement", "Close every neighborhood family under supersets");
  sup->add_option("model", sup_file)->required();
  sup->add_option("-o,--output", sup_output, "Also write the supplemented model here");
  sup->callback([&] {
    run = [&] {
      const Model m = model_from_text(read_file(sup_file));
      const auto* nm = std::get_if<NeighborhoodModel>(&m);
      if (nm == nullptr) throw FormatError("supplement needs a neighborhood model (key \"S\")");
      const NeighborhoodModel plus = supplement(*nm);
      const ConditionReport before = nm_check_conditions(*nm);
      const ConditionReport after = nm_check_conditions(plus);
      if (!sup_output.empty()) write_text(sup_output, model_to_text(plus));
      if (pretty) {
        pretty_model(plus);
        pretty_conditions("before", before);
        pretty_conditions("after", after);
      } else {
        Json out;
        out["model"] = model_to_json(plus);
        out["before"] = condition_report_to_json(before);
        out["after"] = condition_report_to_json(after);
        emit(out);
      }
      return after.all_hold() ? kOk : kNegative;
    };
  });

  // algebra
  std::string alg_file, alg_formula;
  auto* alg = app.add_subcommand("algebra", "Check a plausibility algebra file");
  alg->add_option("algebra", alg_file)->required();
  alg->add_option("--formula", alg_formula, "Also decide whether the algebra validates this formula");
  alg->callback([&] {
    run = [&] {
      const FinitePlausibilityAlgebra a = algebra_from_text(read_file(alg_file));
      std::optional<Formula> f;
      if (!alg_formula.empty()) {
        f = parse(alg_formula);
        if (!admits(Dialect::NablaSystem, *f)) throw DialectError("--formula must be a nabla formula");
      }
      const AlgebraReport r = check_algebra(a);
      Json out;
      out["axioms"] = algebra_report_to_json(r);
      out["valid"] = r.valid();
      int status = r.valid() ? kOk : kNegative;
      if (r.valid()) {
        out["plausible"] = plausible_elements(a);
        const DerivedLawsReport laws = check_derived_laws(a);
        out["derived_laws"] = derived_laws_to_json(laws);
        if (!laws.all_hold()) {
          std::cerr << "internal contradiction: a derived law fails on a valid algebra\n";
          status = kNegative;
        }
        if (f) {
          const bool validates = alg_validates(a, *f);
          out["formula"] = render(*f);
          out["validates"] = validates;
          if (!validates) status = kNegative;
        }
      }
      if (pretty) {
        std::cout << "a1=" << r.a1 << " a2=" << r.a2 << " a3=" << r.a3 << " a4=" << r.a4 << "\n";
        if (r.a4_witness) std::cout << "  a4 fails: sharp(" << r.a4_witness->a << ") != " << a.one() << "\n";
        if (out.contains("plausible")) std::cout << "plausible: " << out["plausible"].dump() << "\n";
        if (out.contains("validates")) {
          std::cout << render(*f) << ": " << (out["validates"].get<bool>() ? "validated" : "refuted") << "\n";
        }
      } else {
        emit(out);
      }
      return status;
    };
  });

  // experiment-k
  World k_worlds = 3;
  unsigned k_threads = 1;
  std::string k_output;
  auto* kexp = app.add_subcommand("experiment-k", "Bounded search for a countermodel to K over constrained models");
  kexp->add_option("--max-worlds", k_worlds)->capture_default_str();
  kexp->add_option("--threads", k_threads)->capture_default_str();
  kexp->add_option("-o,--output", k_output, "Also write the report here");
  kexp->callback([&] {
    run = [&] {
      SearchBounds b{k_worlds, {0, 1}, ModelClass::ConstrainedNeighborhood};
      const SearchOutcome out = run_k_experiment(b, {k_threads});
      const std::string report = write_document(experiment_report(k_formula(), b, out));
      if (!k_output.empty()) write_text(k_output, report);
      if (pretty) {
        std::cout << render(k_formula()) << " over constrained models, <= " << k_worlds << " worlds\n";
        pretty_outcome(out);
      } else {
        std::cout << report;
      }
      return kOk;
    };
  });

  // agreement
  std::vector<std::string> agr_inputs;
  World agr_worlds = 3;
  unsigned agr_threads = 1;
  auto* agr = app.add_subcommand("agreement",
                                 "Compare algebraic validity (k <= 2) with bounded neighborhood validity");
  agr->add_option("inputs", agr_inputs, "Formulas or proof files (their conclusions are used)")->required();
  agr->add_option("--max-worlds", agr_worlds)->capture_default_str();
  agr->add_option("--threads", agr_threads)->capture_default_str();
  agr->callback([&] {
    run = [&] {
      std::vector<Formula> formulas;
      std::set<Formula> seen;
      for (const auto& in : agr_inputs) {
        std::error_code ec;
        Formula f = std::filesystem::is_regular_file(in, ec) ? proof_from_text(read_file(in)).conclusion
                                                             : parse(in);
        if (!admits(Dialect::NablaSystem, f) && !admits(Dialect::BoxSystem, f)) {
          throw DialectError("agreement needs nabla or [] formulas: " + render(f));
        }
        const Formula key = admits(Dialect::NablaSystem, f) ? f
                                                            : translate(f, Dialect::BoxSystem, Dialect::NablaSystem);
        if (seen.insert(key).second) formulas.push_back(std::move(f));
      }
      const AgreementReport r = run_agreement(formulas, agr_worlds, {agr_threads});
      if (pretty) {
        for (const auto& row : r.rows) {
          std::cout << (row.agree() ? "agree    " : "DISAGREE ") << render(row.nabla_form)
                    << "  algebras: " << (row.algebra_valid ? "valid" : "refuted")
                    << "  neighborhood: " << verdict_name(row.neighborhood.verdict) << "\n";
        }
        std::cout << r.agreements() << " agreements, " << r.disagreements() << " disagreements\n";
      } else {
        emit(agreement_report_to_json(r));
      }
      return r.disagreements() == 0 ? kOk : kNegative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
