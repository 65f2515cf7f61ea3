#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plausible/formula.hpp"
#include "plausible/worldset.hpp"

namespace plausible {

/// Atom index to truth set. Atoms absent from the map are false everywhere.
using Valuation = std::map<AtomIndex, WorldSet>;

/// The neighborhoods of one world, sorted ascending by bitmask, no duplicates.
using Family = std::vector<WorldSet>;

/// Sorts and deduplicates.
Family make_family(std::vector<WorldSet> sets);

/// Operations that enumerate every subset of the universe (condition (h),
/// supplementation) refuse larger models.
inline constexpr World kMaxSubsetEnumerationWorlds = 20;

/// <W, S, V>: each world carries a family of world-sets.
class NeighborhoodModel {
 public:
  /// Throws RangeError when world_count is 0 or above kMaxWorlds, when S has
  /// the wrong length, or when a set escapes the universe.
  NeighborhoodModel(World world_count, std::vector<Family> neighborhoods, Valuation valuation);

  World world_count() const { return world_count_; }
  WorldSet universe() const { return WorldSet::universe(world_count_); }
  const Family& neighborhoods(World w) const { return neighborhoods_.at(w); }
  const std::vector<Family>& all_neighborhoods() const { return neighborhoods_; }
  bool has_neighborhood(World w, WorldSet x) const;
  const Valuation& valuation() const { return valuation_; }
  WorldSet value_of(AtomIndex atom) const;

  friend bool operator==(const NeighborhoodModel&, const NeighborhoodModel&) = default;

 private:
  World world_count_;
  std::vector<Family> neighborhoods_;
  Valuation valuation_;
};

/// <W, R, V> with R stored as one successor set per world.
class KripkeModel {
 public:
  KripkeModel(World world_count, const std::vector<std::pair<World, World>>& relation,
              Valuation valuation);
  KripkeModel(World world_count, std::vector<WorldSet> successors, Valuation valuation);

  World world_count() const { return world_count_; }
  WorldSet universe() const { return WorldSet::universe(world_count_); }
  WorldSet successors(World w) const { return successors_.at(w); }
  bool related(World from, World to) const { return successors_.at(from).contains(to); }
  std::vector<std::pair<World, World>> pairs() const;
  const Valuation& valuation() const { return valuation_; }
  WorldSet value_of(AtomIndex atom) const;

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  World world_count_;
  std::vector<WorldSet> successors_;
  Valuation valuation_;
};

/// <W, P>: [] and <> quantify over every world.
class UniversalModel {
 public:
  UniversalModel(World world_count, Valuation valuation);

  World world_count() const { return world_count_; }
  WorldSet universe() const { return WorldSet::universe(world_count_); }
  const Valuation& valuation() const { return valuation_; }
  WorldSet value_of(AtomIndex atom) const;

  /// The same model with R = W x W.
  KripkeModel as_kripke() const;

  friend bool operator==(const UniversalModel&, const UniversalModel&) = default;

 private:
  World world_count_;
  Valuation valuation_;
};

// ---------------------------------------------------------------------------
// Neighborhood semantics. Formulas must be admitted by BoxSystem; anything
// else raises DialectError. Out-of-range worlds raise RangeError.

bool nm_eval(const NeighborhoodModel& m, World w, const Formula& f);

/// {a in W : nm_eval(m, a, f)}, computed world by world.
WorldSet truth_set(const NeighborhoodModel& m, const Formula& f);

bool nm_is_valid(const NeighborhoodModel& m, const Formula& f);

/// Set-at-a-time evaluation: one bitmask operation per connective. Agrees
/// with truth_set; used by the search engine.
WorldSet extension(const NeighborhoodModel& m, const Formula& f);

struct ConditionWitness {
  World world = 0;
  WorldSet x;
  WorldSet y;  // unused for (t) and (n)

  friend bool operator==(const ConditionWitness&, const ConditionWitness&) = default;
};

/// (c) closure under intersection, (h) closure under union with any subset,
/// (t) every neighborhood of a world contains it, (n) W is a neighborhood.
/// Each failed condition carries its first witness in (world, X, Y) order.
struct ConditionReport {
  bool c_holds = true;
  bool h_holds = true;
  bool t_holds = true;
  bool n_holds = true;
  std::optional<ConditionWitness> c_witness;  // X, Y in S(w), X & Y not in S(w)
  std::optional<ConditionWitness> h_witness;  // X in S(w), X | Y not in S(w)
  std::optional<ConditionWitness> t_witness;  // X in S(w), w not in X
  std::optional<ConditionWitness> n_witness;  // W not in S(w)

  bool all_hold() const { return c_holds && h_holds && t_holds && n_holds; }
  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/// Throws RangeError above kMaxSubsetEnumerationWorlds (condition (h)
/// quantifies over all subsets).
ConditionReport nm_check_conditions(const NeighborhoodModel& m);

/// S+(a) = {X subset of W : some Y in S(a) has Y subset of X}.
NeighborhoodModel supplement(const NeighborhoodModel& m);

bool is_superset_closed(const NeighborhoodModel& m);

// ---------------------------------------------------------------------------
// Relational semantics. Formulas must be admitted by S5 (no nabla).

bool km_eval(const KripkeModel& m, World w, const Formula& f);
WorldSet km_truth_set(const KripkeModel& m, const Formula& f);
WorldSet extension(const KripkeModel& m, const Formula& f);

bool um_eval(const UniversalModel& m, World w, const Formula& f);
WorldSet um_truth_set(const UniversalModel& m, const Formula& f);
WorldSet extension(const UniversalModel& m, const Formula& f);

struct RelationProperties {
  bool reflexive = false;
  bool euclidean = false;
  bool symmetric = false;
  bool transitive = false;
  /// reflexive and euclidean
  bool equivalence = false;

  friend bool operator==(const RelationProperties&, const RelationProperties&) = default;
};

RelationProperties relation_properties(const KripkeModel& m);

}  // namespace plausible
