#include "plausible/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>
#include <thread>

#include "plausible/error.hpp"

namespace plausible {

std::string_view model_class_name(ModelClass c) {
  switch (c) {
    case ModelClass::RawNeighborhood: return "raw";
    case ModelClass::ConstrainedNeighborhood: return "constrained";
    case ModelClass::KripkeEquivalence: return "kripke-equiv";
    case ModelClass::KripkeAll: return "kripke-all";
    case ModelClass::Universal: return "universal";
  }
  return "?";
}

std::optional<ModelClass> model_class_from_name(std::string_view name) {
  for (ModelClass c : {ModelClass::RawNeighborhood, ModelClass::ConstrainedNeighborhood,
                       ModelClass::KripkeEquivalence, ModelClass::KripkeAll, ModelClass::Universal}) {
    if (model_class_name(c) == name) return c;
  }
  return std::nullopt;
}

World enumeration_cap(ModelClass c) {
  switch (c) {
    case ModelClass::RawNeighborhood: return 2;
    case ModelClass::ConstrainedNeighborhood: return 4;
    case ModelClass::KripkeEquivalence: return 4;
    case ModelClass::KripkeAll: return 4;
    case ModelClass::Universal: return 6;
  }
  return 0;
}

World sampling_cap(ModelClass c) {
  switch (c) {
    case ModelClass::RawNeighborhood: return 10;
    case ModelClass::ConstrainedNeighborhood: return 16;
    default: return kMaxWorlds;
  }
}

Dialect class_dialect(ModelClass c) {
  switch (c) {
    case ModelClass::RawNeighborhood:
    case ModelClass::ConstrainedNeighborhood: return Dialect::BoxSystem;
    default: return Dialect::S5;
  }
}

World world_count(const Model& m) {
  return std::visit([](const auto& model) { return model.world_count(); }, m);
}

WorldSet model_extension(const Model& m, const Formula& f) {
  return std::visit([&](const auto& model) { return extension(model, f); }, m);
}

bool model_eval(const Model& m, World w, const Formula& f) {
  if (const auto* nm = std::get_if<NeighborhoodModel>(&m)) return nm_eval(*nm, w, f);
  if (const auto* km = std::get_if<KripkeModel>(&m)) return km_eval(*km, w, f);
  return um_eval(std::get<UniversalModel>(m), w, f);
}

bool satisfies_class(const Model& m, ModelClass c) {
  switch (c) {
    case ModelClass::RawNeighborhood:
      return std::holds_alternative<NeighborhoodModel>(m);
    case ModelClass::ConstrainedNeighborhood: {
      const auto* nm = std::get_if<NeighborhoodModel>(&m);
      return nm != nullptr && nm_check_conditions(*nm).all_hold();
    }
    case ModelClass::KripkeEquivalence: {
      const auto* km = std::get_if<KripkeModel>(&m);
      return km != nullptr && relation_properties(*km).equivalence;
    }
    case ModelClass::KripkeAll:
      return std::holds_alternative<KripkeModel>(m);
    case ModelClass::Universal:
      return std::holds_alternative<UniversalModel>(m);
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

// Family bitmask: bit x set iff the world-set with bitmask x is a member.
Family decode_family(std::uint64_t bits) {
  Family out;
  for (; bits != 0; bits &= bits - 1) out.push_back(WorldSet(std::countr_zero(bits)));
  return out;
}

std::uint64_t superset_family(World n, WorldSet core) {
  std::uint64_t bits = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (core.subset_of(WorldSet(x))) bits |= std::uint64_t{1} << x;
  }
  return bits;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw BoundsError("model class is too large to enumerate");
  }
  return a * b;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::vector<AtomIndex> normalized(std::vector<AtomIndex> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

std::vector<WorldSet> decode_relation(World n, std::uint64_t bits) {
  std::vector<WorldSet> successors(n);
  for (World from = 0; from < n; ++from) {
    successors[from] = WorldSet((bits >> (from * n)) & WorldSet::universe(n).bits());
  }
  return successors;
}

}  // namespace

ModelEnumerator::ModelEnumerator(SearchBounds bounds) : bounds_(std::move(bounds)) {
  bounds_.atoms = normalized(std::move(bounds_.atoms));
  const ModelClass c = bounds_.model_class;
  if (bounds_.max_worlds == 0 || bounds_.max_worlds > enumeration_cap(c)) {
    throw BoundsError("class " + std::string(model_class_name(c)) + " enumerates 1.." +
                      std::to_string(enumeration_cap(c)) + " worlds, asked for " +
                      std::to_string(bounds_.max_worlds));
  }
  for (World n = 1; n <= bounds_.max_worlds; ++n) {
    Layer layer;
    layer.worlds = n;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    switch (c) {
      case ModelClass::RawNeighborhood: {
        std::vector<std::uint64_t> all(std::uint64_t{1} << subsets);
        for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
        layer.families.assign(n, all);
        layer.structures = pow_u64(all.size(), n);
        break;
      }
      case ModelClass::ConstrainedNeighborhood: {
        layer.structures = 1;
        for (World w = 0; w < n; ++w) {
          std::vector<std::uint64_t> options;
          for (std::uint64_t core = 0; core < subsets; ++core) {
            if (WorldSet(core).contains(w)) options.push_back(superset_family(n, WorldSet(core)));
          }
          std::sort(options.begin(), options.end());
          layer.structures = checked_mul(layer.structures, options.size());
          layer.families.push_back(std::move(options));
        }
        break;
      }
      case ModelClass::KripkeEquivalence:
      case ModelClass::KripkeAll: {
        const std::uint64_t relations = std::uint64_t{1} << (n * n);
        for (std::uint64_t r = 0; r < relations; ++r) {
          if (c == ModelClass::KripkeEquivalence) {
            KripkeModel probe(n, decode_relation(n, r), {});
            if (!relation_properties(probe).equivalence) continue;
          }
          layer.relations.push_back(r);
        }
        layer.structures = layer.relations.size();
        break;
      }
      case ModelClass::Universal:
        layer.structures = 1;
        break;
    }
    layer.valuations = pow_u64(subsets, bounds_.atoms.size());
    layer.first_index = total_;
    total_ += checked_mul(layer.structures, layer.valuations);
    layers_.push_back(std::move(layer));
  }
}

Model ModelEnumerator::build(const Layer& layer, std::uint64_t structure,
                             std::uint64_t valuation) const {
  const World n = layer.worlds;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  Valuation v;
  for (auto it = bounds_.atoms.rbegin(); it != bounds_.atoms.rend(); ++it) {
    v[*it] = WorldSet(valuation % subsets);
    valuation /= subsets;
  }
  switch (bounds_.model_class) {
    case ModelClass::RawNeighborhood:
    case ModelClass::ConstrainedNeighborhood: {
      std::vector<Family> neighborhoods(n);
      for (World w = n; w-- > 0;) {
        const auto& options = layer.families[w];
        neighborhoods[w] = decode_family(options[structure % options.size()]);
        structure /= options.size();
      }
      return NeighborhoodModel(n, std::move(neighborhoods), std::move(v));
    }
    case ModelClass::KripkeEquivalence:
    case ModelClass::KripkeAll:
      return KripkeModel(n, decode_relation(n, layer.relations[structure]), std::move(v));
    case ModelClass::Universal:
      break;
  }
  return UniversalModel(n, std::move(v));
}

Model ModelEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw BoundsError("model index out of range");
  auto layer = std::find_if(layers_.rbegin(), layers_.rend(),
                            [&](const Layer& l) { return l.first_index <= index; });
  const std::uint64_t local = index - layer->first_index;
  return build(*layer, local / layer->valuations, local % layer->valuations);
}

std::optional<Model> ModelEnumerator::next() {
  if (cursor_ >= total_) return std::nullopt;
  return at(cursor_++);
}

std::string_view verdict_name(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::CountermodelFound: return "CountermodelFound";
    case SearchVerdict::ExhaustedValid: return "ExhaustedValid";
    case SearchVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

// Returns the refuting world of a model, if any.
using Refuter = std::function<std::optional<World>(const Model&)>;

SearchOutcome scan(const ModelEnumerator& e, const Refuter& refute, unsigned threads) {
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t total = e.size();
  std::atomic<std::uint64_t> best{total};

  auto worker = [&](std::atomic<std::uint64_t>& next_chunk) {
    for (;;) {
      const std::uint64_t start = next_chunk.fetch_add(1) * kChunk;
      if (start >= total || start >= best.load()) return;
      const std::uint64_t stop = std::min(total, start + kChunk);
      for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
        if (refute(e.at(i))) {
          std::uint64_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
          return;
        }
      }
    }
  };

  std::atomic<std::uint64_t> next_chunk{0};
  if (threads <= 1) {
    worker(next_chunk);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, std::ref(next_chunk));
    for (auto& th : pool) th.join();
  }

  SearchOutcome out;
  const std::uint64_t hit = best.load();
  if (hit == total) {
    out.verdict = SearchVerdict::ExhaustedValid;
    out.models_checked = total;
    return out;
  }
  out.verdict = SearchVerdict::CountermodelFound;
  out.countermodel = e.at(hit);
  out.world = *refute(*out.countermodel);
  out.models_checked = hit + 1;
  return out;
}

void require_class_dialect(const Formula& f, ModelClass c) {
  if (!admits(class_dialect(c), f)) {
    throw DialectError(render(f) + " cannot be searched in class " +
                       std::string(model_class_name(c)) + " (needs " +
                       std::string(dialect_name(class_dialect(c))) + ")");
  }
}

std::optional<World> first_outside(WorldSet set, World n) {
  const WorldSet missing = set.complement(n);
  if (missing.empty()) return std::nullopt;
  return missing.first();
}

// Independent re-check with the pointwise evaluator.
void revalidate(const SearchOutcome& out, const std::vector<Formula>& gamma, const Formula& f,
                ModelClass c) {
  if (out.verdict != SearchVerdict::CountermodelFound) return;
  const Model& m = *out.countermodel;
  bool ok = satisfies_class(m, c) && !model_eval(m, out.world, f);
  for (const Formula& g : gamma) {
    for (World w = 0; ok && w < world_count(m); ++w) ok = model_eval(m, w, g);
  }
  if (!ok) throw Error("internal: countermodel failed re-validation for " + render(f));
}

}  // namespace

SearchOutcome find_countermodel(const Formula& f, const SearchBounds& bounds,
                                const SearchOptions& options) {
  return check_global_consequence({}, f, bounds, options);
}

SearchOutcome check_global_consequence(const std::vector<Formula>& gamma, const Formula& f,
                                       const SearchBounds& bounds, const SearchOptions& options) {
  for (const Formula& g : gamma) require_class_dialect(g, bounds.model_class);
  require_class_dialect(f, bounds.model_class);
  const ModelEnumerator e(bounds);
  auto refute = [&](const Model& m) -> std::optional<World> {
    const World n = world_count(m);
    for (const Formula& g : gamma) {
      if (model_extension(m, g) != WorldSet::universe(n)) return std::nullopt;
    }
    return first_outside(model_extension(m, f), n);
  };
  SearchOutcome out = scan(e, refute, options.threads);
  revalidate(out, gamma, f, bounds.model_class);
  return out;
}

Formula k_formula() { return parse("[](p0 -> p1) -> ([]p0 -> []p1)"); }

SearchOutcome run_k_experiment(const SearchBounds& bounds, const SearchOptions& options) {
  if (bounds.model_class != ModelClass::ConstrainedNeighborhood) {
    throw BoundsError("the K experiment runs over the constrained neighborhood class only");
  }
  SearchBounds b = bounds;
  b.atoms = {0, 1};
  return find_countermodel(k_formula(), b, options);
}

// ---------------------------------------------------------------------------

std::uint64_t draw(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection sampling; unbiased for any bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

WorldSet random_subset(Rng& rng, World n) { return WorldSet(rng() & WorldSet::universe(n).bits()); }

}  // namespace

Model sample_model(Rng& rng, ModelClass c, World worlds, const std::vector<AtomIndex>& atoms) {
  if (worlds == 0 || worlds > sampling_cap(c)) {
    throw BoundsError("class " + std::string(model_class_name(c)) + " samples 1.." +
                      std::to_string(sampling_cap(c)) + " worlds");
  }
  const World n = worlds;
  Valuation v;
  for (AtomIndex a : normalized(atoms)) v[a] = random_subset(rng, n);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  switch (c) {
    case ModelClass::RawNeighborhood: {
      std::vector<Family> s(n);
      for (World w = 0; w < n; ++w) {
        for (std::uint64_t x = 0; x < subsets; ++x) {
          if (rng() & 1U) s[w].push_back(WorldSet(x));
        }
      }
      return NeighborhoodModel(n, std::move(s), std::move(v));
    }
    case ModelClass::ConstrainedNeighborhood: {
      std::vector<Family> s(n);
      for (World w = 0; w < n; ++w) {
        const WorldSet core = random_subset(rng, n).with(w);
        for (std::uint64_t x = 0; x < subsets; ++x) {
          if (core.subset_of(WorldSet(x))) s[w].push_back(WorldSet(x));
        }
      }
      return NeighborhoodModel(n, std::move(s), std::move(v));
    }
    case ModelClass::KripkeEquivalence: {
      // Random partition: each world joins the block of an earlier world or
      // opens a new one.
      std::vector<World> block(n);
      for (World w = 0; w < n; ++w) block[w] = static_cast<World>(draw(rng, w + 1));
      for (World w = 0; w < n; ++w) {
        if (block[w] != w) block[w] = block[block[w]];
      }
      std::vector<WorldSet> successors(n);
      for (World a = 0; a < n; ++a) {
        for (World b = 0; b < n; ++b) {
          if (block[a] == block[b]) successors[a] = successors[a].with(b);
        }
      }
      return KripkeModel(n, std::move(successors), std::move(v));
    }
    case ModelClass::KripkeAll: {
      std::vector<WorldSet> successors(n);
      for (World a = 0; a < n; ++a) successors[a] = random_subset(rng, n);
      return KripkeModel(n, std::move(successors), std::move(v));
    }
    case ModelClass::Universal:
      break;
  }
  return UniversalModel(n, std::move(v));
}

namespace {

Formula random_formula_at(Rng& rng, const FormulaShape& shape, int depth, int budget) {
  if (budget <= 0 || draw(rng, 4) == 0) {
    const std::uint64_t pick = draw(rng, shape.atoms.size() + 2);
    if (pick < shape.atoms.size()) return Atom(shape.atoms[pick]);
    return pick == shape.atoms.size() ? Top() : Bottom();
  }
  std::vector<Kind> kinds{Kind::Not, Kind::And, Kind::Or, Kind::Implies, Kind::Iff};
  if (depth < shape.max_depth) {
    switch (shape.dialect) {
      case Dialect::BoxSystem: kinds.push_back(Kind::Box); kinds.push_back(Kind::Box); break;
      case Dialect::NablaSystem: kinds.push_back(Kind::Nabla); kinds.push_back(Kind::Nabla); break;
      case Dialect::S5: kinds.push_back(Kind::Box); kinds.push_back(Kind::Diamond); break;
      case Dialect::Classical: break;
    }
  }
  const Kind k = kinds[draw(rng, kinds.size())];
  if (k == Kind::Not) return Not(random_formula_at(rng, shape, depth, budget - 1));
  if (k == Kind::Box || k == Kind::Diamond || k == Kind::Nabla) {
    return Formula::make(k, random_formula_at(rng, shape, depth + 1, budget - 1));
  }
  const int left = static_cast<int>(draw(rng, static_cast<std::uint64_t>(budget)));
  Formula lhs = random_formula_at(rng, shape, depth, left);
  Formula rhs = random_formula_at(rng, shape, depth, budget - 1 - left);
  return Formula::make(k, lhs, rhs);
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  return random_formula_at(rng, shape, 0, shape.max_size);
}

SearchOutcome sample_countermodel(const Formula& f, const SearchBounds& bounds,
                                  std::uint64_t samples, std::uint64_t seed) {
  require_class_dialect(f, bounds.model_class);
  if (bounds.max_worlds == 0 || bounds.max_worlds > sampling_cap(bounds.model_class)) {
    throw BoundsError("class " + std::string(model_class_name(bounds.model_class)) +
                      " samples 1.." + std::to_string(sampling_cap(bounds.model_class)) + " worlds");
  }
  Rng rng(seed);
  SearchOutcome out;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const World n = static_cast<World>(1 + draw(rng, bounds.max_worlds));
    Model m = sample_model(rng, bounds.model_class, n, bounds.atoms);
    out.models_checked = i + 1;
    if (auto w = first_outside(model_extension(m, f), n)) {
      out.verdict = SearchVerdict::CountermodelFound;
      out.countermodel = std::move(m);
      out.world = *w;
      revalidate(out, {}, f, bounds.model_class);
      return out;
    }
  }
  out.verdict = SearchVerdict::Inconclusive;
  return out;
}

}  // namespace plausible
