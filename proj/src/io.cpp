#include "plausible/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "plausible/error.hpp"

namespace plausible {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string write_document(const Json& doc) {
  if (!doc.is_object()) return doc.dump() + "\n";
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + Json(key).dump() + ": ";
    const bool rows = value.is_array() && !value.empty() && value.front().is_object();
    if (rows) {
      out += "[\n";
      for (std::size_t r = 0; r < value.size(); ++r) {
        out += "    " + value[r].dump() + (r + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++i < doc.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

const Json& require(const Json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

void require_object(const Json& j, const char* where) {
  if (!j.is_object()) throw FormatError(std::string(where) + ": expected an object");
}

void require_array(const Json& j, const char* where) {
  if (!j.is_array()) throw FormatError(std::string(where) + ": expected an array");
}

void only_keys(const Json& obj, std::initializer_list<std::string_view> keys, const char* where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw FormatError(std::string(where) + ": unknown key \"" + key + "\"");
    }
  }
}

std::uint64_t as_index(const Json& j, std::uint64_t limit, const char* where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw FormatError(std::string(where) + ": expected a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v >= limit) throw FormatError(std::string(where) + ": " + std::to_string(v) + " out of range");
  return v;
}

std::string as_string(const Json& j, const char* where) {
  if (!j.is_string()) throw FormatError(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

// Decimal digits only; no sign, no leading '+'.
std::optional<std::uint64_t> parse_decimal(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

WorldSet world_set_from_json(const Json& j, World n, const char* where) {
  require_array(j, where);
  WorldSet s;
  for (const Json& w : j) s = s.with(static_cast<World>(as_index(w, n, where)));
  return s;
}

Json valuation_to_json(const Valuation& v) {
  Json out = Json::object();
  for (const auto& [atom, set] : v) out["p" + std::to_string(atom)] = world_set_to_json(set);
  return out;
}

Valuation valuation_from_json(const Json& j, World n) {
  require_object(j, "V");
  Valuation v;
  for (const auto& [key, value] : j.items()) {
    std::optional<std::uint64_t> index;
    if (key.size() > 1 && key[0] == 'p') index = parse_decimal(std::string_view(key).substr(1));
    if (!index || *index > std::numeric_limits<AtomIndex>::max()) {
      throw FormatError("V: bad atom name \"" + key + "\"");
    }
    v[static_cast<AtomIndex>(*index)] = world_set_from_json(value, n, "V");
  }
  return v;
}

}  // namespace

Json world_set_to_json(WorldSet s) {
  Json out = Json::array();
  for (World w : s.to_vector()) out.push_back(w);
  return out;
}

Json model_to_json(const Model& m) {
  Json out;
  out["worlds"] = world_count(m);
  if (const auto* nm = std::get_if<NeighborhoodModel>(&m)) {
    Json s = Json::object();
    for (World w = 0; w < nm->world_count(); ++w) {
      Json family = Json::array();
      for (WorldSet x : nm->neighborhoods(w)) family.push_back(world_set_to_json(x));
      s[std::to_string(w)] = std::move(family);
    }
    out["S"] = std::move(s);
    out["V"] = valuation_to_json(nm->valuation());
  } else if (const auto* km = std::get_if<KripkeModel>(&m)) {
    Json r = Json::array();
    for (const auto& [from, to] : km->pairs()) r.push_back({from, to});
    out["R"] = std::move(r);
    out["V"] = valuation_to_json(km->valuation());
  } else {
    out["V"] = valuation_to_json(std::get<UniversalModel>(m).valuation());
  }
  return out;
}

Model model_from_json(const Json& doc) {
  require_object(doc, "model");
  only_keys(doc, {"worlds", "S", "R", "V"}, "model");
  const auto n = static_cast<World>(as_index(require(doc, "worlds", "model"), kMaxWorlds + 1, "worlds"));
  if (n == 0) throw FormatError("worlds: a model needs at least one world");
  if (doc.contains("S") && doc.contains("R")) throw FormatError("model: both \"S\" and \"R\" given");
  Valuation v;
  if (auto it = doc.find("V"); it != doc.end()) v = valuation_from_json(*it, n);

  if (auto it = doc.find("S"); it != doc.end()) {
    require_object(*it, "S");
    std::vector<Family> families(n);
    for (const auto& [key, value] : it->items()) {
      const auto w = parse_decimal(key);
      if (!w || *w >= n) throw FormatError("S: bad world key \"" + key + "\"");
      require_array(value, "S");
      std::vector<WorldSet> sets;
      for (const Json& x : value) sets.push_back(world_set_from_json(x, n, "S"));
      families[*w] = make_family(std::move(sets));
    }
    return NeighborhoodModel(n, std::move(families), std::move(v));
  }
  if (auto it = doc.find("R"); it != doc.end()) {
    require_array(*it, "R");
    std::vector<std::pair<World, World>> pairs;
    for (const Json& p : *it) {
      if (!p.is_array() || p.size() != 2) throw FormatError("R: expected [from, to] pairs");
      pairs.emplace_back(static_cast<World>(as_index(p[0], n, "R")),
                         static_cast<World>(as_index(p[1], n, "R")));
    }
    return KripkeModel(n, pairs, std::move(v));
  }
  return UniversalModel(n, std::move(v));
}

std::string model_to_text(const Model& m) { return write_document(model_to_json(m)); }

Model model_from_text(std::string_view text) { return model_from_json(parse_document(text)); }

// ---------------------------------------------------------------------------

Json proof_to_json(const Proof& p) {
  Json out;
  out["system"] = system_name(p.system);
  Json premises = Json::array();
  for (const Formula& f : p.premises) premises.push_back(render(f));
  out["premises"] = std::move(premises);
  Json lines = Json::array();
  for (const ProofLine& line : p.lines) {
    const Justification& j = line.justification;
    Json l;
    l["formula"] = render(line.formula);
    l["rule"] = rule_name(j.rule);
    if (!j.schema_id.empty()) l["schema"] = j.schema_id;
    if (j.binding) {
      Json b = Json::object();
      for (const auto& [var, f] : *j.binding) b[std::string(1, static_cast<char>('A' + var))] = render(f);
      l["binding"] = std::move(b);
    }
    l["refs"] = j.refs;
    lines.push_back(std::move(l));
  }
  out["lines"] = std::move(lines);
  out["conclusion"] = render(p.conclusion);
  return out;
}

Proof proof_from_json(const Json& doc) {
  require_object(doc, "proof");
  only_keys(doc, {"system", "premises", "lines", "conclusion"}, "proof");
  Proof p;
  const std::string system = as_string(require(doc, "system", "proof"), "system");
  const auto id = system_from_name(system);
  if (!id) throw FormatError("system: unknown system \"" + system + "\"");
  p.system = *id;

  if (auto it = doc.find("premises"); it != doc.end()) {
    require_array(*it, "premises");
    for (const Json& f : *it) p.premises.push_back(parse(as_string(f, "premises")));
  }

  const Json& lines = require(doc, "lines", "proof");
  require_array(lines, "lines");
  for (const Json& l : lines) {
    require_object(l, "line");
    only_keys(l, {"formula", "rule", "schema", "binding", "refs"}, "line");
    ProofLine line{parse(as_string(require(l, "formula", "line"), "formula")), {}};
    const std::string rule = as_string(require(l, "rule", "line"), "rule");
    const auto r = rule_from_name(rule);
    if (!r) throw FormatError("rule: unknown rule \"" + rule + "\"");
    line.justification.rule = *r;
    if (auto it = l.find("schema"); it != l.end()) line.justification.schema_id = as_string(*it, "schema");
    if (auto it = l.find("binding"); it != l.end()) {
      require_object(*it, "binding");
      MetaBinding b;
      for (const auto& [key, value] : it->items()) {
        if (key.size() != 1 || key[0] < 'A' || key[0] > 'Z') {
          throw FormatError("binding: bad metavariable \"" + key + "\"");
        }
        b.insert_or_assign(static_cast<MetaVar>(key[0] - 'A'), parse(as_string(value, "binding")));
      }
      line.justification.binding = std::move(b);
    }
    if (auto it = l.find("refs"); it != l.end()) {
      require_array(*it, "refs");
      for (const Json& ref : *it) {
        line.justification.refs.push_back(as_index(ref, std::numeric_limits<std::size_t>::max(), "refs"));
      }
    }
    p.lines.push_back(std::move(line));
  }
  p.conclusion = parse(as_string(require(doc, "conclusion", "proof"), "conclusion"));
  return p;
}

std::string proof_to_text(const Proof& p) { return write_document(proof_to_json(p)); }

Proof proof_from_text(std::string_view text) { return proof_from_json(parse_document(text)); }

// ---------------------------------------------------------------------------

Json algebra_to_json(const FinitePlausibilityAlgebra& a) {
  Json out;
  out["base"] = a.base_size();
  out["sharp"] = a.sharp_table();
  return out;
}

FinitePlausibilityAlgebra algebra_from_json(const Json& doc) {
  require_object(doc, "algebra");
  only_keys(doc, {"base", "sharp"}, "algebra");
  const auto k = static_cast<unsigned>(as_index(require(doc, "base", "algebra"), kMaxAlgebraBase + 1, "base"));
  if (k == 0) throw FormatError("base: must be at least 1");
  const Json& sharp = require(doc, "sharp", "algebra");
  require_array(sharp, "sharp");
  const std::size_t carrier = std::size_t{1} << k;
  if (sharp.size() != carrier) {
    throw FormatError("sharp: expected " + std::to_string(carrier) + " entries");
  }
  std::vector<Element> table;
  for (const Json& e : sharp) table.push_back(static_cast<Element>(as_index(e, carrier, "sharp")));
  return FinitePlausibilityAlgebra(k, std::move(table));
}

FinitePlausibilityAlgebra algebra_from_text(std::string_view text) {
  return algebra_from_json(parse_document(text));
}

// ---------------------------------------------------------------------------

namespace {

Json condition_entry(bool holds, const std::optional<ConditionWitness>& w, bool pair) {
  Json out;
  out["holds"] = holds;
  if (w) {
    Json wj;
    wj["world"] = w->world;
    wj["X"] = world_set_to_json(w->x);
    if (pair) wj["Y"] = world_set_to_json(w->y);
    out["witness"] = std::move(wj);
  }
  return out;
}

Json pair_entry(bool holds, const std::optional<ElementPair>& w, bool pair) {
  Json out;
  out["holds"] = holds;
  if (w) {
    Json wj;
    wj["a"] = w->a;
    if (pair) wj["b"] = w->b;
    out["witness"] = std::move(wj);
  }
  return out;
}

Json search_report(const Formula& f, const std::vector<Formula>* gamma, const SearchBounds& bounds,
                   const SearchOutcome& outcome) {
  Json out;
  out["formula"] = render(f);
  if (gamma) {
    Json g = Json::array();
    for (const Formula& x : *gamma) g.push_back(render(x));
    out["gamma"] = std::move(g);
  }
  out["class"] = model_class_name(bounds.model_class);
  Json b;
  b["max_worlds"] = bounds.max_worlds;
  b["atoms"] = bounds.atoms;
  out["bounds"] = std::move(b);
  out["verdict"] = verdict_name(outcome.verdict);
  out["models_checked"] = outcome.models_checked;
  if (outcome.countermodel) {
    out["countermodel"] = model_to_json(*outcome.countermodel);
    out["world"] = outcome.world;
  }
  return out;
}

}  // namespace

Json condition_report_to_json(const ConditionReport& r) {
  Json out;
  out["c"] = condition_entry(r.c_holds, r.c_witness, true);
  out["h"] = condition_entry(r.h_holds, r.h_witness, true);
  out["t"] = condition_entry(r.t_holds, r.t_witness, false);
  out["n"] = condition_entry(r.n_holds, r.n_witness, false);
  return out;
}

Json algebra_report_to_json(const AlgebraReport& r) {
  Json out;
  out["a1"] = pair_entry(r.a1, r.a1_witness, true);
  out["a2"] = pair_entry(r.a2, r.a2_witness, true);
  out["a3"] = pair_entry(r.a3, r.a3_witness, false);
  out["a4"] = pair_entry(r.a4, r.a4_witness, false);
  return out;
}

Json derived_laws_to_json(const DerivedLawsReport& r) {
  Json out;
  out["upward"] = pair_entry(r.upward, r.upward_witness, true);
  out["monotone"] = pair_entry(r.monotone, r.monotone_witness, true);
  out["join_bound"] = pair_entry(r.join_bound, r.join_bound_witness, true);
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["accepted"] = v.accepted;
  if (!v.accepted) {
    out["failing_line"] = v.failing_line;
    out["reason"] = v.reason;
  }
  return out;
}

Json experiment_report(const Formula& f, const SearchBounds& bounds, const SearchOutcome& outcome) {
  return search_report(f, nullptr, bounds, outcome);
}

Json consequence_report(const std::vector<Formula>& gamma, const Formula& f,
                        const SearchBounds& bounds, const SearchOutcome& outcome) {
  return search_report(f, &gamma, bounds, outcome);
}

Json agreement_report_to_json(const AgreementReport& r) {
  Json out;
  out["class"] = model_class_name(ModelClass::ConstrainedNeighborhood);
  out["max_worlds"] = r.max_worlds;
  out["algebras"] = "valid, base 1 and 2";
  out["agreements"] = r.agreements();
  out["disagreements"] = r.disagreements();
  Json rows = Json::array();
  for (const AgreementRow& row : r.rows) {
    Json j;
    j["formula"] = render(row.nabla_form);
    j["box_form"] = render(row.box_form);
    j["algebra_valid"] = row.algebra_valid;
    j["algebras_checked"] = row.algebras_checked;
    if (row.refuting_algebra) j["refuting_algebra"] = algebra_to_json(*row.refuting_algebra);
    j["neighborhood_verdict"] = verdict_name(row.neighborhood.verdict);
    j["models_checked"] = row.neighborhood.models_checked;
    j["agree"] = row.agree();
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace plausible
