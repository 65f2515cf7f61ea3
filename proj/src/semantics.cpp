#include "plausible/semantics.hpp"

#include <algorithm>
#include <string>

#include "plausible/error.hpp"

namespace plausible {

Family make_family(std::vector<WorldSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

namespace {

void check_world_count(World n) {
  if (n == 0 || n > kMaxWorlds) {
    throw RangeError("world count must be in 1.." + std::to_string(kMaxWorlds) + ", got " +
                     std::to_string(n));
  }
}

void check_within(World n, WorldSet s, const char* what) {
  if (!s.subset_of(WorldSet::universe(n))) {
    throw RangeError(std::string(what) + " mentions a world outside 0.." + std::to_string(n - 1));
  }
}

void check_valuation(World n, const Valuation& v) {
  for (const auto& [atom, set] : v) check_within(n, set, "valuation");
}

void check_world(World n, World w) {
  if (w >= n) {
    throw RangeError("world " + std::to_string(w) + " out of range for a model with " +
                     std::to_string(n) + " worlds");
  }
}

WorldSet lookup(const Valuation& v, AtomIndex atom) {
  auto it = v.find(atom);
  return it == v.end() ? WorldSet{} : it->second;
}

}  // namespace

NeighborhoodModel::NeighborhoodModel(World world_count, std::vector<Family> neighborhoods,
                                     Valuation valuation)
    : world_count_(world_count), valuation_(std::move(valuation)) {
  check_world_count(world_count);
  if (neighborhoods.size() != world_count) {
    throw RangeError("neighborhood function has " + std::to_string(neighborhoods.size()) +
                     " entries for " + std::to_string(world_count) + " worlds");
  }
  neighborhoods_.reserve(neighborhoods.size());
  for (auto& family : neighborhoods) {
    for (WorldSet s : family) check_within(world_count, s, "neighborhood");
    neighborhoods_.push_back(make_family(std::move(family)));
  }
  check_valuation(world_count, valuation_);
}

bool NeighborhoodModel::has_neighborhood(World w, WorldSet x) const {
  const Family& f = neighborhoods_.at(w);
  return std::binary_search(f.begin(), f.end(), x);
}

WorldSet NeighborhoodModel::value_of(AtomIndex atom) const { return lookup(valuation_, atom); }

KripkeModel::KripkeModel(World world_count, const std::vector<std::pair<World, World>>& relation,
                         Valuation valuation)
    : world_count_(world_count), valuation_(std::move(valuation)) {
  check_world_count(world_count);
  successors_.assign(world_count, WorldSet{});
  for (auto [from, to] : relation) {
    check_world(world_count, from);
    check_world(world_count, to);
    successors_[from] = successors_[from].with(to);
  }
  check_valuation(world_count, valuation_);
}

KripkeModel::KripkeModel(World world_count, std::vector<WorldSet> successors, Valuation valuation)
    : world_count_(world_count), successors_(std::move(successors)), valuation_(std::move(valuation)) {
  check_world_count(world_count);
  if (successors_.size() != world_count) {
    throw RangeError("accessibility relation has the wrong number of rows");
  }
  for (WorldSet s : successors_) check_within(world_count, s, "accessibility relation");
  check_valuation(world_count, valuation_);
}

std::vector<std::pair<World, World>> KripkeModel::pairs() const {
  std::vector<std::pair<World, World>> out;
  for (World from = 0; from < world_count_; ++from) {
    for (World to : successors_[from].to_vector()) out.emplace_back(from, to);
  }
  return out;
}

WorldSet KripkeModel::value_of(AtomIndex atom) const { return lookup(valuation_, atom); }

UniversalModel::UniversalModel(World world_count, Valuation valuation)
    : world_count_(world_count), valuation_(std::move(valuation)) {
  check_world_count(world_count);
  check_valuation(world_count, valuation_);
}

WorldSet UniversalModel::value_of(AtomIndex atom) const { return lookup(valuation_, atom); }

KripkeModel UniversalModel::as_kripke() const {
  return KripkeModel(world_count_, std::vector<WorldSet>(world_count_, universe()), valuation_);
}

// ---------------------------------------------------------------------------
// Pointwise evaluation. The classical clauses are shared; `modal` decides
// Box and Diamond at a world.

namespace {

template <typename Model, typename Modal>
bool eval_at(const Model& m, World w, const Formula& f, const Modal& modal) {
  switch (f.kind()) {
    case Kind::Atom: return m.value_of(f.atom_index()).contains(w);
    case Kind::Top: return true;
    case Kind::Bottom: return false;
    case Kind::Not: return !eval_at(m, w, f.lhs(), modal);
    case Kind::And: return eval_at(m, w, f.lhs(), modal) && eval_at(m, w, f.rhs(), modal);
    case Kind::Or: return eval_at(m, w, f.lhs(), modal) || eval_at(m, w, f.rhs(), modal);
    case Kind::Implies: return !eval_at(m, w, f.lhs(), modal) || eval_at(m, w, f.rhs(), modal);
    case Kind::Iff: return eval_at(m, w, f.lhs(), modal) == eval_at(m, w, f.rhs(), modal);
    case Kind::Box:
    case Kind::Diamond:
    case Kind::Nabla: return modal(w, f);
  }
  return false;
}

template <typename Eval>
WorldSet collect(World n, const Eval& eval) {
  WorldSet out;
  for (World w = 0; w < n; ++w) {
    if (eval(w)) out = out.with(w);
  }
  return out;
}

void require_dialect(Dialect d, const Formula& f, const char* semantics) {
  if (!admits(d, f)) {
    throw DialectError(std::string(semantics) + " cannot evaluate " + render(f) + " (outside " +
                       std::string(dialect_name(d)) + ")");
  }
}

bool nm_eval_unchecked(const NeighborhoodModel& m, World w, const Formula& f);

WorldSet nm_truth_set_unchecked(const NeighborhoodModel& m, const Formula& f) {
  return collect(m.world_count(), [&](World a) { return nm_eval_unchecked(m, a, f); });
}

bool nm_eval_unchecked(const NeighborhoodModel& m, World w, const Formula& f) {
  return eval_at(m, w, f, [&](World a, const Formula& g) {
    return m.has_neighborhood(a, nm_truth_set_unchecked(m, g.lhs()));
  });
}

bool km_eval_unchecked(const KripkeModel& m, World w, const Formula& f) {
  return eval_at(m, w, f, [&](World a, const Formula& g) {
    const auto successors = m.successors(a).to_vector();
    if (g.kind() == Kind::Box) {
      return std::all_of(successors.begin(), successors.end(),
                         [&](World z) { return km_eval_unchecked(m, z, g.lhs()); });
    }
    return std::any_of(successors.begin(), successors.end(),
                       [&](World z) { return km_eval_unchecked(m, z, g.lhs()); });
  });
}

bool um_eval_unchecked(const UniversalModel& m, World w, const Formula& f) {
  return eval_at(m, w, f, [&](World, const Formula& g) {
    for (World b = 0; b < m.world_count(); ++b) {
      const bool holds = um_eval_unchecked(m, b, g.lhs());
      if (g.kind() == Kind::Box && !holds) return false;
      if (g.kind() == Kind::Diamond && holds) return true;
    }
    return g.kind() == Kind::Box;
  });
}

// Set-at-a-time evaluation; `modal` maps (node, operand extension) to the
// node's extension.
template <typename Model, typename Modal>
WorldSet extension_of(const Model& m, const Formula& f, const Modal& modal) {
  const World n = m.world_count();
  switch (f.kind()) {
    case Kind::Atom: return m.value_of(f.atom_index());
    case Kind::Top: return WorldSet::universe(n);
    case Kind::Bottom: return WorldSet{};
    case Kind::Not: return extension_of(m, f.lhs(), modal).complement(n);
    case Kind::And: return extension_of(m, f.lhs(), modal) & extension_of(m, f.rhs(), modal);
    case Kind::Or: return extension_of(m, f.lhs(), modal) | extension_of(m, f.rhs(), modal);
    case Kind::Implies:
      return extension_of(m, f.lhs(), modal).complement(n) | extension_of(m, f.rhs(), modal);
    case Kind::Iff: {
      const WorldSet a = extension_of(m, f.lhs(), modal);
      const WorldSet b = extension_of(m, f.rhs(), modal);
      return (a.complement(n) | b) & (b.complement(n) | a);
    }
    case Kind::Box:
    case Kind::Diamond:
    case Kind::Nabla: return modal(f, extension_of(m, f.lhs(), modal));
  }
  return WorldSet{};
}

}  // namespace

bool nm_eval(const NeighborhoodModel& m, World w, const Formula& f) {
  check_world(m.world_count(), w);
  require_dialect(Dialect::BoxSystem, f, "neighborhood semantics");
  return nm_eval_unchecked(m, w, f);
}

WorldSet truth_set(const NeighborhoodModel& m, const Formula& f) {
  require_dialect(Dialect::BoxSystem, f, "neighborhood semantics");
  return nm_truth_set_unchecked(m, f);
}

bool nm_is_valid(const NeighborhoodModel& m, const Formula& f) {
  return truth_set(m, f) == m.universe();
}

WorldSet extension(const NeighborhoodModel& m, const Formula& f) {
  require_dialect(Dialect::BoxSystem, f, "neighborhood semantics");
  return extension_of(m, f, [&](const Formula&, WorldSet operand) {
    return collect(m.world_count(), [&](World a) { return m.has_neighborhood(a, operand); });
  });
}

bool km_eval(const KripkeModel& m, World w, const Formula& f) {
  check_world(m.world_count(), w);
  require_dialect(Dialect::S5, f, "Kripke semantics");
  return km_eval_unchecked(m, w, f);
}

WorldSet km_truth_set(const KripkeModel& m, const Formula& f) {
  require_dialect(Dialect::S5, f, "Kripke semantics");
  return collect(m.world_count(), [&](World a) { return km_eval_unchecked(m, a, f); });
}

WorldSet extension(const KripkeModel& m, const Formula& f) {
  require_dialect(Dialect::S5, f, "Kripke semantics");
  return extension_of(m, f, [&](const Formula& g, WorldSet operand) {
    if (g.kind() == Kind::Box) {
      return collect(m.world_count(), [&](World a) { return m.successors(a).subset_of(operand); });
    }
    return collect(m.world_count(), [&](World a) { return !(m.successors(a) & operand).empty(); });
  });
}

bool um_eval(const UniversalModel& m, World w, const Formula& f) {
  check_world(m.world_count(), w);
  require_dialect(Dialect::S5, f, "universal semantics");
  return um_eval_unchecked(m, w, f);
}

WorldSet um_truth_set(const UniversalModel& m, const Formula& f) {
  require_dialect(Dialect::S5, f, "universal semantics");
  return collect(m.world_count(), [&](World a) { return um_eval_unchecked(m, a, f); });
}

WorldSet extension(const UniversalModel& m, const Formula& f) {
  require_dialect(Dialect::S5, f, "universal semantics");
  const WorldSet all = m.universe();
  return extension_of(m, f, [&](const Formula& g, WorldSet operand) {
    if (g.kind() == Kind::Box) return operand == all ? all : WorldSet{};
    return operand.empty() ? WorldSet{} : all;
  });
}

// ---------------------------------------------------------------------------

namespace {

void check_enumerable(const NeighborhoodModel& m) {
  if (m.world_count() > kMaxSubsetEnumerationWorlds) {
    throw RangeError("subset enumeration supports at most " +
                     std::to_string(kMaxSubsetEnumerationWorlds) + " worlds");
  }
}

}  // namespace

ConditionReport nm_check_conditions(const NeighborhoodModel& m) {
  check_enumerable(m);
  ConditionReport r;
  const World n = m.world_count();
  const WorldSet all = m.universe();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (World a = 0; a < n; ++a) {
    const Family& family = m.neighborhoods(a);
    if (r.c_holds) {
      for (std::size_t i = 0; i < family.size() && r.c_holds; ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          if (!m.has_neighborhood(a, family[i] & family[j])) {
            r.c_holds = false;
            r.c_witness = ConditionWitness{a, family[i], family[j]};
            break;
          }
        }
      }
    }
    if (r.h_holds) {
      for (std::size_t i = 0; i < family.size() && r.h_holds; ++i) {
        for (std::uint64_t y = 0; y < subsets; ++y) {
          if (!m.has_neighborhood(a, family[i] | WorldSet(y))) {
            r.h_holds = false;
            r.h_witness = ConditionWitness{a, family[i], WorldSet(y)};
            break;
          }
        }
      }
    }
    if (r.t_holds) {
      for (WorldSet x : family) {
        if (!x.contains(a)) {
          r.t_holds = false;
          r.t_witness = ConditionWitness{a, x, WorldSet{}};
          break;
        }
      }
    }
    if (r.n_holds && !m.has_neighborhood(a, all)) {
      r.n_holds = false;
      r.n_witness = ConditionWitness{a, all, WorldSet{}};
    }
  }
  return r;
}

NeighborhoodModel supplement(const NeighborhoodModel& m) {
  check_enumerable(m);
  const World n = m.world_count();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<Family> closed(n);
  for (World a = 0; a < n; ++a) {
    const Family& family = m.neighborhoods(a);
    for (std::uint64_t x = 0; x < subsets; ++x) {
      const bool covered = std::any_of(family.begin(), family.end(),
                                       [&](WorldSet y) { return y.subset_of(WorldSet(x)); });
      if (covered) closed[a].push_back(WorldSet(x));
    }
  }
  return NeighborhoodModel(n, std::move(closed), m.valuation());
}

bool is_superset_closed(const NeighborhoodModel& m) {
  check_enumerable(m);
  const std::uint64_t subsets = std::uint64_t{1} << m.world_count();
  for (World a = 0; a < m.world_count(); ++a) {
    for (WorldSet x : m.neighborhoods(a)) {
      for (std::uint64_t y = 0; y < subsets; ++y) {
        if (x.subset_of(WorldSet(y)) && !m.has_neighborhood(a, WorldSet(y))) return false;
      }
    }
  }
  return true;
}

RelationProperties relation_properties(const KripkeModel& m) {
  RelationProperties p;
  const World n = m.world_count();
  p.reflexive = true;
  p.euclidean = true;
  p.symmetric = true;
  p.transitive = true;
  for (World a = 0; a < n; ++a) {
    if (!m.related(a, a)) p.reflexive = false;
    for (World b = 0; b < n; ++b) {
      if (m.related(a, b) && !m.related(b, a)) p.symmetric = false;
      for (World c = 0; c < n; ++c) {
        if (m.related(a, b) && m.related(a, c) && !m.related(b, c)) p.euclidean = false;
        if (m.related(a, b) && m.related(b, c) && !m.related(a, c)) p.transitive = false;
      }
    }
  }
  p.equivalence = p.reflexive && p.euclidean;
  return p;
}

}  // namespace plausible
