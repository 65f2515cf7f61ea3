#include <filesystem>
#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "plausible/error.hpp"
#include "plausible/io.hpp"

using namespace plausible;
namespace fs = std::filesystem;

namespace {

SearchBounds bounds(World n, std::vector<AtomIndex> atoms, ModelClass c) { return {n, std::move(atoms), c}; }

// Class sizes counted from first principles: a constrained world picks a core
// among the 2^(n-1) subsets containing it; a valuation picks one subset per atom.
std::uint64_t constrained_size(World max, std::size_t atoms) {
  std::uint64_t total = 0;
  for (World n = 1; n <= max; ++n) {
    std::uint64_t structures = 1;
    for (World w = 0; w < n; ++w) structures *= std::uint64_t{1} << (n - 1);
    total += structures * (std::uint64_t{1} << (n * atoms));
  }
  return total;
}

Formula instantiate_at_atoms(const Schema& s) {
  MetaBinding b;
  AtomIndex next = 0;
  for (MetaVar v : metavars_of(s)) b.insert_or_assign(v, Atom(next++));
  return instantiate(s, b);
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(ModelEnumerator(bounds(1, {0}, ModelClass::ConstrainedNeighborhood)).size(), 2u);
  EXPECT_EQ(ModelEnumerator(bounds(1, {}, ModelClass::RawNeighborhood)).size(), 4u);

  ModelEnumerator eq(bounds(2, {}, ModelClass::KripkeEquivalence));
  // One relation at one world, plus the two equivalence relations on {0,1}.
  ASSERT_EQ(eq.size(), 3u);
  std::set<std::set<std::pair<World, World>>> two_world;
  for (std::uint64_t i = 0; i < eq.size(); ++i) {
    const auto k = std::get<KripkeModel>(eq.at(i));
    if (k.world_count() != 2) continue;
    const auto pairs = k.pairs();
    two_world.insert({pairs.begin(), pairs.end()});
  }
  EXPECT_EQ(two_world, (std::set<std::set<std::pair<World, World>>>{{{0, 0}, {1, 1}},
                                                                    {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}));
}

TEST(Enumerate, ConstrainedSizesMatchCount) {
  for (World n = 1; n <= 4; ++n) {
    for (std::size_t a = 0; a <= 2; ++a) {
      std::vector<AtomIndex> atoms;
      for (std::size_t i = 0; i < a; ++i) atoms.push_back(static_cast<AtomIndex>(i));
      if (n == 4 && a == 2) continue;
      EXPECT_EQ(ModelEnumerator(bounds(n, atoms, ModelClass::ConstrainedNeighborhood)).size(),
                constrained_size(n, a));
    }
  }
}

TEST(Enumerate, StreamMatchesRandomAccessWithoutDuplicates) {
  for (ModelClass c : {ModelClass::RawNeighborhood, ModelClass::ConstrainedNeighborhood,
                       ModelClass::KripkeEquivalence, ModelClass::KripkeAll, ModelClass::Universal}) {
    ModelEnumerator e(bounds(2, {0}, c));
    std::set<std::string> seen;
    std::uint64_t i = 0;
    while (auto m = e.next()) {
      EXPECT_EQ(model_to_text(*m), model_to_text(e.at(i)));
      EXPECT_TRUE(seen.insert(model_to_text(*m)).second);
      EXPECT_TRUE(satisfies_class(*m, c));
      ++i;
    }
    EXPECT_EQ(i, e.size());
  }
}

TEST(Enumerate, ConstrainedEqualsFilteredRaw) {
  std::set<std::string> constrained, filtered;
  ModelEnumerator c(bounds(2, {}, ModelClass::ConstrainedNeighborhood));
  while (auto m = c.next()) constrained.insert(model_to_text(*m));
  ModelEnumerator r(bounds(2, {}, ModelClass::RawNeighborhood));
  while (auto m = r.next()) {
    const auto& nm = std::get<NeighborhoodModel>(*m);
    const auto o = oracle::conditions(oracle::from(nm));
    if (o.c && o.h && o.t && o.n) filtered.insert(model_to_text(*m));
  }
  EXPECT_EQ(constrained, filtered);
  EXPECT_EQ(constrained.size(), 1u + 4u);
}

TEST(Enumerate, BoundsErrors) {
  EXPECT_THROW(ModelEnumerator(bounds(3, {}, ModelClass::RawNeighborhood)), BoundsError);
  EXPECT_THROW(ModelEnumerator(bounds(5, {}, ModelClass::ConstrainedNeighborhood)), BoundsError);
  EXPECT_THROW(ModelEnumerator(bounds(0, {}, ModelClass::Universal)), BoundsError);
}

TEST(FindCountermodel, FirstCountermodelIsFixed) {
  const auto out = find_countermodel(parse("p0 -> []p0"), bounds(2, {0}, ModelClass::ConstrainedNeighborhood));
  ASSERT_EQ(out.verdict, SearchVerdict::CountermodelFound);
  const auto& m = std::get<NeighborhoodModel>(*out.countermodel);
  const WorldSet W = WorldSet::universe(2);
  EXPECT_EQ(m.world_count(), 2u);
  EXPECT_EQ(m.neighborhoods(0), (Family{W}));
  EXPECT_EQ(m.neighborhoods(1), (Family{W}));
  EXPECT_EQ(m.value_of(0), WorldSet::singleton(0));
  EXPECT_EQ(out.world, 0u);
  // Independent check: p0 true at 0, {0} not a neighborhood of 0.
  const auto o = oracle::from(m);
  EXPECT_TRUE(oracle::eval(o, 0, parse("p0")));
  EXPECT_FALSE(oracle::eval(o, 0, parse("[]p0")));
}

TEST(FindCountermodel, TAndFiveValid) {
  EXPECT_EQ(find_countermodel(parse("[]p0 -> p0"), bounds(3, {0}, ModelClass::ConstrainedNeighborhood)).verdict,
            SearchVerdict::ExhaustedValid);
  EXPECT_EQ(find_countermodel(parse("<>p0 -> []<>p0"), bounds(3, {0}, ModelClass::KripkeEquivalence)).verdict,
            SearchVerdict::ExhaustedValid);
}

TEST(FindCountermodel, DialectAndBounds) {
  EXPECT_THROW(find_countermodel(parse("<>p0"), bounds(1, {0}, ModelClass::ConstrainedNeighborhood)), DialectError);
  EXPECT_THROW(find_countermodel(parse("nabla p0"), bounds(1, {0}, ModelClass::KripkeAll)), DialectError);
  EXPECT_THROW(find_countermodel(parse("[]p0"), bounds(3, {0}, ModelClass::RawNeighborhood)), BoundsError);
}

TEST(FindCountermodel, ThreadsDoNotChangeVerdict) {
  Rng rng(4);
  FormulaShape shape;
  shape.max_depth = 2;
  for (int i = 0; i < 40; ++i) {
    const Formula f = random_formula(rng, shape);
    const auto b = bounds(3, {0, 1}, ModelClass::ConstrainedNeighborhood);
    const auto one = find_countermodel(f, b, {1});
    const auto many = find_countermodel(f, b, {4});
    EXPECT_EQ(one.verdict, many.verdict);
    EXPECT_EQ(one.models_checked, many.models_checked);
    EXPECT_EQ(one.world, many.world);
    if (one.countermodel) EXPECT_EQ(model_to_text(*one.countermodel), model_to_text(*many.countermodel));
  }
}

TEST(FindCountermodel, AgreesWithOracleOnRandomFormulas) {
  Rng rng(6);
  FormulaShape shape;
  shape.max_depth = 2;
  shape.max_size = 8;
  for (int i = 0; i < 30; ++i) {
    const Formula f = random_formula(rng, shape);
    const auto b = bounds(2, {0, 1}, ModelClass::ConstrainedNeighborhood);
    bool refuted = false;
    ModelEnumerator e(b);
    while (auto m = e.next()) {
      const auto o = oracle::from(std::get<NeighborhoodModel>(*m));
      for (int w = 0; w < o.n && !refuted; ++w) refuted = !oracle::eval(o, w, f);
      if (refuted) break;
    }
    EXPECT_EQ(find_countermodel(f, b).verdict == SearchVerdict::CountermodelFound, refuted) << render(f);
  }
}

TEST(Consequence, Examples) {
  const auto b = bounds(2, {0}, ModelClass::ConstrainedNeighborhood);
  // Globally true p0 forces ||p0|| = W, a neighborhood under (n).
  EXPECT_EQ(check_global_consequence({parse("p0")}, parse("[]p0"), b).verdict, SearchVerdict::ExhaustedValid);
  EXPECT_EQ(check_global_consequence({}, Top(), b).verdict, SearchVerdict::ExhaustedValid);
  EXPECT_EQ(check_global_consequence({Bottom()}, parse("p0"), b).verdict, SearchVerdict::ExhaustedValid);
  const auto out = check_global_consequence({parse("p0 -> p1")}, parse("[]p0 -> []p1"),
                                            bounds(2, {0, 1}, ModelClass::ConstrainedNeighborhood));
  EXPECT_EQ(out.verdict, SearchVerdict::ExhaustedValid);
  const auto local = check_global_consequence({}, parse("p0 -> []p0"), b);
  EXPECT_EQ(local.verdict, SearchVerdict::CountermodelFound);
}

TEST(KExperiment, OneWorldChecksFourModels) {
  const auto out = run_k_experiment(bounds(1, {0, 1}, ModelClass::ConstrainedNeighborhood));
  EXPECT_EQ(out.models_checked, 4u);
  EXPECT_THROW(run_k_experiment(bounds(1, {0, 1}, ModelClass::KripkeAll)), BoundsError);
}

TEST(KExperiment, Deterministic) {
  const auto b = bounds(3, {0, 1}, ModelClass::ConstrainedNeighborhood);
  const auto a = run_k_experiment(b);
  const auto c = run_k_experiment(b, {3});
  EXPECT_EQ(write_document(experiment_report(k_formula(), b, a)),
            write_document(experiment_report(k_formula(), b, c)));
}

TEST(Schemas, LPBoxAxiomsValidOnConstrainedModels) {
  for (const auto& ns : list_axiom_schemas(SystemId::LPBox)) {
    const Formula f = instantiate_at_atoms(ns.schema);
    EXPECT_EQ(find_countermodel(f, bounds(3, {0, 1}, ModelClass::ConstrainedNeighborhood)).verdict,
              SearchVerdict::ExhaustedValid)
        << ns.id;
  }
}

TEST(Schemas, S5SchemasValidOnEquivalenceFrames) {
  std::vector<NamedSchema> all = list_axiom_schemas(SystemId::S5);
  for (const auto& ns : derived_schemas(SystemId::S5)) all.push_back(ns);
  for (const auto& ns : all) {
    const Formula f = instantiate_at_atoms(ns.schema);
    const std::set<AtomIndex> atoms = atoms_of(f);
    EXPECT_EQ(find_countermodel(f, bounds(3, {atoms.begin(), atoms.end()}, ModelClass::KripkeEquivalence)).verdict,
              SearchVerdict::ExhaustedValid)
        << ns.id;
  }
}

TEST(Schemas, FixtureTheoremsAreSound) {
  for (const auto& entry : fs::directory_iterator(std::string(PLAUSIBLE_FIXTURES) + "/proofs")) {
    if (entry.path().extension() != ".json" || entry.path().stem() == "expected") continue;
    const Proof p = proof_from_text(read_file(entry.path().string()));
    const Verdict v = check_proof(p);
    if (!v.accepted || !v.premise_free.back()) continue;
    const std::set<AtomIndex> atoms = atoms_of(p.conclusion);
    const std::vector<AtomIndex> at(atoms.begin(), atoms.end());
    if (p.system == SystemId::LPBox || p.system == SystemId::LNabla) {
      const Formula f = p.system == SystemId::LNabla
                            ? translate(p.conclusion, Dialect::NablaSystem, Dialect::BoxSystem)
                            : p.conclusion;
      EXPECT_EQ(find_countermodel(f, bounds(3, at, ModelClass::ConstrainedNeighborhood)).verdict,
                SearchVerdict::ExhaustedValid)
          << entry.path();
    } else if (p.system == SystemId::S5) {
      EXPECT_EQ(find_countermodel(p.conclusion, bounds(3, at, ModelClass::KripkeEquivalence)).verdict,
                SearchVerdict::ExhaustedValid)
          << entry.path();
    }
  }
}

TEST(Sampling, SeededAndReproducible) {
  const Formula f = parse("p0 -> []p0");
  const auto b = bounds(6, {0}, ModelClass::ConstrainedNeighborhood);
  const auto a = sample_countermodel(f, b, 200, 42);
  const auto c = sample_countermodel(f, b, 200, 42);
  ASSERT_EQ(a.verdict, SearchVerdict::CountermodelFound);
  EXPECT_EQ(a.models_checked, c.models_checked);
  EXPECT_EQ(model_to_text(*a.countermodel), model_to_text(*c.countermodel));
  EXPECT_FALSE(model_eval(*a.countermodel, a.world, f));
  EXPECT_EQ(sample_countermodel(parse("[]p0 -> p0"), b, 300, 1).verdict, SearchVerdict::Inconclusive);
}

TEST(Sampling, DrawIsInRangeAndCoversIt) {
  Rng rng(0);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = draw(rng, 7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Sampling, ModelsBelongToTheirClass) {
  Rng rng(10);
  for (ModelClass c : {ModelClass::RawNeighborhood, ModelClass::ConstrainedNeighborhood,
                       ModelClass::KripkeEquivalence, ModelClass::KripkeAll, ModelClass::Universal}) {
    for (int i = 0; i < 50; ++i) {
      const World n = static_cast<World>(1 + draw(rng, 4));
      const Model m = sample_model(rng, c, n, {0, 1});
      EXPECT_EQ(world_count(m), n);
      EXPECT_TRUE(satisfies_class(m, c)) << model_class_name(c);
    }
  }
}

TEST(Enumerate, ConstrainedModelsAreReflexiveKripkeModels) {
  Rng rng(21);
  FormulaShape shape;
  shape.max_depth = 3;
  std::vector<Formula> formulas{k_formula(), parse("[]p0 -> [][]p0"), parse("[]p0 -> p0")};
  for (int i = 0; i < 20; ++i) formulas.push_back(random_formula(rng, shape));
  ModelEnumerator e(bounds(3, {0, 1}, ModelClass::ConstrainedNeighborhood));
  while (auto m = e.next()) {
    const auto& nm = std::get<NeighborhoodModel>(*m);
    std::vector<WorldSet> successors;
    for (World w = 0; w < nm.world_count(); ++w) {
      WorldSet core = nm.universe();
      for (WorldSet x : nm.neighborhoods(w)) core = core & x;
      successors.push_back(core);
    }
    const KripkeModel k(nm.world_count(), successors, nm.valuation());
    ASSERT_TRUE(relation_properties(k).reflexive);
    for (const Formula& f : formulas) ASSERT_EQ(truth_set(nm, f), km_truth_set(k, f)) << render(f);
  }
}
