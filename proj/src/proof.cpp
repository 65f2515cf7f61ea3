#include "plausible/proof.hpp"

#include <algorithm>
#include <set>

namespace plausible {

std::string_view system_name(SystemId s) {
  switch (s) {
    case SystemId::LPC: return "LPC";
    case SystemId::S5: return "S5";
    case SystemId::LNabla: return "LNabla";
    case SystemId::LPBox: return "LPBox";
  }
  return "?";
}

std::optional<SystemId> system_from_name(std::string_view name) {
  for (SystemId s : {SystemId::LPC, SystemId::S5, SystemId::LNabla, SystemId::LPBox}) {
    if (system_name(s) == name) return s;
  }
  return std::nullopt;
}

Dialect system_dialect(SystemId s) {
  switch (s) {
    case SystemId::LPC: return Dialect::Classical;
    case SystemId::S5: return Dialect::S5;
    case SystemId::LNabla: return Dialect::NablaSystem;
    case SystemId::LPBox: return Dialect::BoxSystem;
  }
  return Dialect::Classical;
}

namespace {

using Catalog = std::vector<NamedSchema>;

Catalog build(std::initializer_list<std::pair<const char*, const char*>> entries) {
  Catalog out;
  for (const auto& [id, text] : entries) out.push_back({id, parse_schema(text)});
  return out;
}

Catalog with_base(const Catalog& specific) {
  Catalog out = lpc_schemas();
  out.insert(out.end(), specific.begin(), specific.end());
  return out;
}

}  // namespace

const std::vector<NamedSchema>& lpc_schemas() {
  static const Catalog base = build({
      {"PL1", "A -> (B -> A)"},
      {"PL2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"},
      {"PL3", "(~B -> ~A) -> (A -> B)"},
      {"PL4", "A & B -> A"},
      {"PL5", "A & B -> B"},
      {"PL6", "A -> (B -> A & B)"},
      {"PL7", "A -> A | B"},
      {"PL8", "B -> A | B"},
      {"PL9", "(A -> C) -> ((B -> C) -> (A | B -> C))"},
      {"PL10", "(A <-> B) -> (A -> B)"},
      {"PL11", "(A <-> B) -> (B -> A)"},
      {"PL12", "(A -> B) -> ((B -> A) -> (A <-> B))"},
      {"PL13", "true"},
      {"PL14", "false -> A"},
      {"PL15", "A | ~A"},
  });
  return base;
}

const std::vector<NamedSchema>& list_axiom_schemas(SystemId s) {
  static const Catalog s5 = with_base(build({
      {"T", "[]A -> A"},
      {"5", "<>A -> []<>A"},
      {"K", "[](A -> B) -> ([]A -> []B)"},
      {"DfDia", "<>A <-> ~[]~A"},
  }));
  static const Catalog lnabla = with_base(build({
      {"Ax1", "nabla A & nabla B -> nabla(A & B)"},
      {"Ax2", "nabla(A | ~A)"},
      {"Ax3", "nabla A -> A"},
  }));
  static const Catalog lpbox = with_base(build({
      {"C", "[]A & []B -> [](A & B)"},
      {"H", "[]A | []B -> [](A | B)"},
      {"T", "[]A -> A"},
      {"N", "[]true"},
  }));
  switch (s) {
    case SystemId::LPC: return lpc_schemas();
    case SystemId::S5: return s5;
    case SystemId::LNabla: return lnabla;
    case SystemId::LPBox: return lpbox;
  }
  return lpc_schemas();
}

const std::vector<NamedSchema>& derived_schemas(SystemId s) {
  static const Catalog none;
  static const Catalog s5 = build({
      {"TDia", "A -> <>A"},
      {"D", "[]A -> <>A"},
      {"B", "A -> []<>A"},
      {"DfBox", "[]A <-> ~<>~A"},
      {"BDia", "<>[]A -> A"},
      {"5Dia", "<>[]A -> []A"},
      {"4", "[]A -> [][]A"},
      {"4Dia", "<><>A -> <>A"},
      {"M", "[](A & B) -> []A & []B"},
      {"N", "[]true"},
      {"C", "[]A & []B -> [](A & B)"},
  });
  static const Catalog lnabla = build({
      {"NablaI", "~nabla false"},
      {"NablaII", "nabla A -> nabla(A | B)"},
      {"NablaIV", "A -> ~nabla ~A"},
      {"NablaV", "nabla A -> ~nabla ~A"},
      {"NablaVI", "nabla ~A -> ~nabla A"},
      {"HEquiv", "nabla A | nabla B -> nabla(A | B)"},
  });
  switch (s) {
    case SystemId::S5: return s5;
    case SystemId::LNabla: return lnabla;
    default: return none;
  }
}

std::optional<NamedSchema> find_axiom(SystemId s, std::string_view id) {
  for (const auto& entry : list_axiom_schemas(s)) {
    if (entry.id == id) return entry;
  }
  return std::nullopt;
}

std::optional<AxiomMatch> is_axiom_instance(SystemId s, const Formula& f) {
  if (!admits(system_dialect(s), f)) return std::nullopt;
  for (const auto& entry : list_axiom_schemas(s)) {
    if (auto binding = match_schema(entry.schema, f)) return AxiomMatch{entry.id, *binding};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Premise: return "premise";
    case Rule::Axiom: return "axiom";
    case Rule::MP: return "mp";
    case Rule::RE: return "re";
    case Rule::RNabla: return "rnabla";
    case Rule::RN: return "rn";
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (Rule r : {Rule::Premise, Rule::Axiom, Rule::MP, Rule::RE, Rule::RNabla, Rule::RN}) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

std::size_t arity(Rule r) {
  switch (r) {
    case Rule::Premise:
    case Rule::Axiom: return 0;
    case Rule::MP: return 2;
    default: return 1;
  }
}

bool system_has_rule(SystemId s, Rule r, const CheckOptions& options) {
  switch (r) {
    case Rule::Premise:
    case Rule::Axiom:
    case Rule::MP: return true;
    case Rule::RE: return s == SystemId::LPBox || (s == SystemId::S5 && options.s5_primitive_re);
    case Rule::RNabla: return s == SystemId::LNabla;
    case Rule::RN: return s == SystemId::S5;
  }
  return false;
}

void check_structure(const Proof& p) {
  if (p.lines.empty()) throw ProofFormatError("proof has no lines");
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const std::size_t line = i + 1;
    const Justification& j = p.lines[i].justification;
    if (j.refs.size() != arity(j.rule)) {
      throw ProofFormatError("line " + std::to_string(line) + ": rule '" +
                             std::string(rule_name(j.rule)) + "' takes " +
                             std::to_string(arity(j.rule)) + " reference(s), got " +
                             std::to_string(j.refs.size()));
    }
    for (std::size_t ref : j.refs) {
      if (ref == 0 || ref >= line) {
        throw ProofFormatError("line " + std::to_string(line) + ": reference " +
                               std::to_string(ref) + " does not name an earlier line");
      }
    }
  }
}

struct LineResult {
  bool ok = true;
  std::string reason;
};

LineResult fail(std::string reason) { return {false, std::move(reason)}; }

LineResult check_axiom_line(SystemId system, const ProofLine& line) {
  const Justification& j = line.justification;
  if (j.schema_id.empty()) {
    if (is_axiom_instance(system, line.formula)) return {};
    return fail("not an instance of any axiom schema of " + std::string(system_name(system)));
  }
  auto schema = find_axiom(system, j.schema_id);
  if (!schema) {
    return fail("schema '" + j.schema_id + "' is not an axiom of " +
                std::string(system_name(system)));
  }
  if (j.binding) {
    try {
      if (instantiate(schema->schema, *j.binding) == line.formula) return {};
    } catch (const UnboundMetavariableError& e) {
      return fail(e.what());
    }
    return fail("the stated binding does not instantiate " + j.schema_id + " to this formula");
  }
  if (match_schema(schema->schema, line.formula)) return {};
  return fail("not an instance of " + j.schema_id + " (" + render_schema(schema->schema) + ")");
}

}  // namespace

Verdict check_proof(const Proof& p, const CheckOptions& options) {
  check_structure(p);
  const Dialect dialect = system_dialect(p.system);
  const std::set<Formula> premises(p.premises.begin(), p.premises.end());
  Verdict v;
  v.premise_free.reserve(p.lines.size());

  auto reject = [&](std::size_t line, std::string reason) {
    v.accepted = false;
    v.failing_line = line;
    v.reason = std::move(reason);
    return v;
  };

  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const std::size_t number = i + 1;
    const ProofLine& line = p.lines[i];
    const Justification& j = line.justification;
    auto formula_of = [&](std::size_t ref) -> const Formula& { return p.lines[ref - 1].formula; };
    auto free_of = [&](std::size_t ref) { return static_cast<bool>(v.premise_free[ref - 1]); };

    if (!admits(dialect, line.formula)) {
      return reject(number, "dialect violation: " + render(line.formula) + " is outside " +
                                std::string(dialect_name(dialect)));
    }
    if (!system_has_rule(p.system, j.rule, options)) {
      return reject(number, "rule '" + std::string(rule_name(j.rule)) + "' is not a rule of " +
                                std::string(system_name(p.system)));
    }

    bool premise_free = true;
    LineResult result;
    switch (j.rule) {
      case Rule::Premise:
        premise_free = false;
        if (!premises.contains(line.formula)) result = fail("formula is not among the premises");
        break;
      case Rule::Axiom:
        result = check_axiom_line(p.system, line);
        break;
      case Rule::MP: {
        const std::size_t minor = j.refs[0];
        const std::size_t major = j.refs[1];
        premise_free = free_of(minor) && free_of(major);
        if (formula_of(major) != Implies(formula_of(minor), line.formula)) {
          result = fail("MP: line " + std::to_string(major) + " is not line " +
                        std::to_string(minor) + " -> this formula");
        }
        break;
      }
      case Rule::RE:
      case Rule::RNabla:
      case Rule::RN: {
        const std::size_t ref = j.refs[0];
        premise_free = free_of(ref);
        const Formula& source = formula_of(ref);
        const std::string name(rule_name(j.rule));
        if (!premise_free) {
          result = fail(name + " applied to line " + std::to_string(ref) +
                        ", which depends on premises");
          break;
        }
        if (j.rule == Rule::RN) {
          if (line.formula != Box(source)) result = fail("rn: formula is not [] of line " + std::to_string(ref));
          break;
        }
        const Kind connective = j.rule == Rule::RE ? Kind::Iff : Kind::Implies;
        const Kind modality = j.rule == Rule::RE ? Kind::Box : Kind::Nabla;
        if (source.kind() != connective) {
          result = fail(name + ": line " + std::to_string(ref) + " has the wrong main connective");
          break;
        }
        const Formula expected = Formula::make(connective, Formula::make(modality, source.lhs()),
                                               Formula::make(modality, source.rhs()));
        if (line.formula != expected) {
          result = fail(name + ": expected " + render(expected));
        }
        break;
      }
    }
    if (!result.ok) return reject(number, result.reason);
    v.premise_free.push_back(premise_free);
  }

  if (p.lines.back().formula != p.conclusion) {
    return reject(p.lines.size(), "last line does not match the claimed conclusion " +
                                      render(p.conclusion));
  }
  v.accepted = true;
  return v;
}

// ---------------------------------------------------------------------------

ProofBuilder::ProofBuilder(SystemId system, std::vector<Formula> premises)
    : system_(system), premises_(std::move(premises)) {}

std::size_t ProofBuilder::push(Formula f, Justification j) {
  lines_.push_back({std::move(f), std::move(j)});
  return lines_.size();
}

const Formula& ProofBuilder::formula(std::size_t line) const {
  if (line == 0 || line > lines_.size()) throw ProofFormatError("no line " + std::to_string(line));
  return lines_[line - 1].formula;
}

std::size_t ProofBuilder::premise(const Formula& f) {
  if (std::find(premises_.begin(), premises_.end(), f) == premises_.end()) premises_.push_back(f);
  return push(f, {Rule::Premise, "", std::nullopt, {}});
}

std::size_t ProofBuilder::axiom(std::string schema_id, const Formula& f) {
  return push(f, {Rule::Axiom, std::move(schema_id), std::nullopt, {}});
}

std::size_t ProofBuilder::axiom(std::string_view schema_id, const MetaBinding& binding) {
  auto schema = find_axiom(system_, schema_id);
  if (!schema) {
    throw Error("schema '" + std::string(schema_id) + "' is not an axiom of " +
                std::string(system_name(system_)));
  }
  return axiom(std::string(schema_id), instantiate(schema->schema, binding));
}

std::size_t ProofBuilder::mp(std::size_t minor, std::size_t major) {
  const Formula& implication = formula(major);
  if (implication.kind() != Kind::Implies || implication.lhs() != formula(minor)) {
    throw Error("ProofBuilder::mp: line " + std::to_string(major) + " is not line " +
                std::to_string(minor) + " -> X");
  }
  return push(implication.rhs(), {Rule::MP, "", std::nullopt, {minor, major}});
}

std::size_t ProofBuilder::re(std::size_t ref) {
  const Formula& f = formula(ref);
  if (f.kind() != Kind::Iff) throw Error("ProofBuilder::re: line is not a biconditional");
  return push(Iff(Box(f.lhs()), Box(f.rhs())), {Rule::RE, "", std::nullopt, {ref}});
}

std::size_t ProofBuilder::rnabla(std::size_t ref) {
  const Formula& f = formula(ref);
  if (f.kind() != Kind::Implies) throw Error("ProofBuilder::rnabla: line is not an implication");
  return push(Implies(Nabla(f.lhs()), Nabla(f.rhs())), {Rule::RNabla, "", std::nullopt, {ref}});
}

std::size_t ProofBuilder::rn(std::size_t ref) {
  return push(Box(formula(ref)), {Rule::RN, "", std::nullopt, {ref}});
}

Proof ProofBuilder::finish() const {
  if (lines_.empty()) throw ProofFormatError("proof has no lines");
  return Proof{system_, premises_, lines_, lines_.back().formula};
}

}  // namespace plausible
