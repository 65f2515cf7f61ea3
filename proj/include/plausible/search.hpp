#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

#include "plausible/formula.hpp"
#include "plausible/semantics.hpp"

namespace plausible {

enum class ModelClass {
  /// Every neighborhood function; 2^(2^n) families per world.
  RawNeighborhood,
  /// Models satisfying (c), (h), (t), (n), enumerated as S(w) = supersets of
  /// a core X_w containing w.
  ConstrainedNeighborhood,
  /// Reflexive and euclidean relations.
  KripkeEquivalence,
  /// Every relation.
  KripkeAll,
  /// Universal models.
  Universal,
};

/// "raw", "constrained", "kripke-equiv", "kripke-all", "universal"
std::string_view model_class_name(ModelClass c);
std::optional<ModelClass> model_class_from_name(std::string_view name);

/// Largest world count exhaustive enumeration accepts for the class.
World enumeration_cap(ModelClass c);
/// Largest world count random sampling accepts for the class.
World sampling_cap(ModelClass c);
/// Dialect a formula must be admitted by to be searched in the class.
Dialect class_dialect(ModelClass c);

struct SearchBounds {
  World max_worlds = 1;
  std::vector<AtomIndex> atoms;
  ModelClass model_class = ModelClass::ConstrainedNeighborhood;
};

using Model = std::variant<NeighborhoodModel, KripkeModel, UniversalModel>;

World world_count(const Model& m);
/// Extension of f in whichever model is held.
WorldSet model_extension(const Model& m, const Formula& f);
/// Pointwise evaluation in whichever model is held.
bool model_eval(const Model& m, World w, const Formula& f);
/// Re-checks the structural constraints of the class on a model.
bool satisfies_class(const Model& m, ModelClass c);

/// Random-access view of every model of a class up to max_worlds, in the
/// deterministic order: world count ascending, then per-world families (or
/// the relation) in bitmask order with world 0 most significant, then
/// valuations in bitmask order with the first atom most significant.
class ModelEnumerator {
 public:
  /// Throws BoundsError when max_worlds is 0 or above enumeration_cap.
  explicit ModelEnumerator(SearchBounds bounds);

  std::uint64_t size() const { return total_; }
  Model at(std::uint64_t index) const;
  /// Sequential access; empty once exhausted.
  std::optional<Model> next();

  const SearchBounds& bounds() const { return bounds_; }

 private:
  struct Layer {
    World worlds = 0;
    // Neighborhood classes: family bitmasks per world. Kripke classes: one
    // relation encoding per entry of `relations`.
    std::vector<std::vector<std::uint64_t>> families;
    std::vector<std::uint64_t> relations;
    std::uint64_t structures = 0;
    std::uint64_t valuations = 0;
    std::uint64_t first_index = 0;
  };

  Model build(const Layer& layer, std::uint64_t structure, std::uint64_t valuation) const;

  SearchBounds bounds_;
  std::vector<Layer> layers_;
  std::uint64_t total_ = 0;
  std::uint64_t cursor_ = 0;
};

enum class SearchVerdict { CountermodelFound, ExhaustedValid, Inconclusive };

std::string_view verdict_name(SearchVerdict v);

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::Inconclusive;
  std::optional<Model> countermodel;
  World world = 0;
  /// Models examined up to and including the countermodel, or the whole
  /// class on exhaustion.
  std::uint64_t models_checked = 0;
};

struct SearchOptions {
  /// Worker threads partitioning the enumeration; the verdict is the
  /// minimum-index countermodel regardless of scheduling.
  unsigned threads = 1;
};

/// First model (and lowest world) in enumeration order where f fails.
/// Throws DialectError if f does not fit the class and BoundsError if the
/// bounds exceed the cap. A returned countermodel has been re-validated
/// pointwise and against the class constraints.
SearchOutcome find_countermodel(const Formula& f, const SearchBounds& bounds,
                                const SearchOptions& options = {});

/// First model validating every member of gamma at every world while
/// refuting f at some world.
SearchOutcome check_global_consequence(const std::vector<Formula>& gamma, const Formula& f,
                                       const SearchBounds& bounds,
                                       const SearchOptions& options = {});

/// [](p0 -> p1) -> ([]p0 -> []p1) over ConstrainedNeighborhood with atoms
/// {0, 1}. Throws BoundsError for any other class.
SearchOutcome run_k_experiment(const SearchBounds& bounds, const SearchOptions& options = {});

/// The K formula searched by run_k_experiment.
Formula k_formula();

// ---------------------------------------------------------------------------
// Seeded sampling

using Rng = std::mt19937_64;

/// Uniform in [0, bound).
std::uint64_t draw(Rng& rng, std::uint64_t bound);

/// A random model of the class with exactly `worlds` worlds.
Model sample_model(Rng& rng, ModelClass c, World worlds, const std::vector<AtomIndex>& atoms);

struct FormulaShape {
  int max_depth = 3;  // modal depth bound
  int max_size = 12;  // soft bound on the number of connectives
  std::vector<AtomIndex> atoms{0, 1};
  Dialect dialect = Dialect::BoxSystem;
};

Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Samples `samples` models with 1..max_worlds worlds; CountermodelFound on a
/// hit, Inconclusive otherwise. Bounds are checked against sampling_cap.
SearchOutcome sample_countermodel(const Formula& f, const SearchBounds& bounds,
                                  std::uint64_t samples, std::uint64_t seed);

}  // namespace plausible
