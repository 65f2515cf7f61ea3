#include <gtest/gtest.h>

#include "oracle.hpp"
#include "plausible/error.hpp"
#include "plausible/search.hpp"

using namespace plausible;

namespace {

WorldSet ws(std::initializer_list<World> worlds) { return WorldSet::from_worlds(worlds); }

NeighborhoodModel two_world() {
  return NeighborhoodModel(2, {{ws({0}), ws({0, 1})}, {ws({1}), ws({0, 1})}}, {{0, ws({0})}});
}

}  // namespace

TEST(NeighborhoodEval, Examples) {
  const auto m = two_world();
  EXPECT_TRUE(nm_eval(m, 0, parse("[]p0")));
  EXPECT_FALSE(nm_eval(m, 1, parse("[]p0")));
  for (World w = 0; w < 2; ++w) EXPECT_TRUE(nm_eval(m, w, Top()));
  // Cross-check with the naive evaluator.
  const auto o = oracle::from(m);
  EXPECT_TRUE(oracle::eval(o, 0, parse("[]p0")));
  EXPECT_FALSE(oracle::eval(o, 1, parse("[]p0")));
}

TEST(NeighborhoodEval, TruthSets) {
  const auto m = two_world();
  EXPECT_EQ(truth_set(m, parse("p0")), ws({0}));
  EXPECT_EQ(truth_set(m, parse("~p0")), ws({1}));
  EXPECT_EQ(truth_set(m, Bottom()), WorldSet());
  EXPECT_EQ(truth_set(m, parse("p7")), WorldSet());
}

TEST(NeighborhoodEval, Errors) {
  const auto m = two_world();
  EXPECT_THROW(nm_eval(m, 2, Top()), RangeError);
  EXPECT_THROW(nm_eval(m, 0, parse("<>p0")), DialectError);
  EXPECT_THROW(nm_eval(m, 0, parse("nabla p0")), DialectError);
  EXPECT_THROW(NeighborhoodModel(0, {}, {}), RangeError);
  EXPECT_THROW(NeighborhoodModel(1, {{ws({1})}}, {}), RangeError);
  EXPECT_THROW(NeighborhoodModel(2, {{}}, {}), RangeError);
}

TEST(NeighborhoodEval, Validity) {
  const auto m = two_world();
  EXPECT_FALSE(nm_is_valid(m, parse("p0")));
  EXPECT_TRUE(nm_is_valid(m, parse("~[]false")));
  EXPECT_TRUE(nm_is_valid(m, parse("[]true")));
}

TEST(Conditions, Examples) {
  const NeighborhoodModel full(2, {{ws({0, 1})}, {ws({0, 1})}}, {});
  EXPECT_TRUE(nm_check_conditions(full).all_hold());

  const NeighborhoodModel lone(2, {{ws({0})}, {ws({0, 1})}}, {});
  const auto r = nm_check_conditions(lone);
  EXPECT_FALSE(r.n_holds);
  ASSERT_TRUE(r.n_witness);
  EXPECT_EQ(r.n_witness->world, 0u);
  EXPECT_FALSE(r.h_holds);
  ASSERT_TRUE(r.h_witness);
  EXPECT_EQ(r.h_witness->world, 0u);
  EXPECT_EQ(r.h_witness->x, ws({0}));
  EXPECT_EQ(r.h_witness->y, ws({1}));
  EXPECT_TRUE(r.c_holds);
  EXPECT_TRUE(r.t_holds);

  const NeighborhoodModel off(2, {{ws({1}), ws({0, 1})}, {ws({0, 1})}}, {});
  const auto t = nm_check_conditions(off);
  EXPECT_FALSE(t.t_holds);
  ASSERT_TRUE(t.t_witness);
  EXPECT_EQ(t.t_witness->world, 0u);
  EXPECT_EQ(t.t_witness->x, ws({1}));
}

TEST(Conditions, EmptyFamilyIsLegal) {
  const NeighborhoodModel m(1, {{}}, {});
  const auto r = nm_check_conditions(m);
  EXPECT_FALSE(r.n_holds);
  EXPECT_TRUE(r.c_holds && r.h_holds && r.t_holds);
}

TEST(Conditions, WitnessesReverifyAndAgreeWithOracle) {
  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    const World n = static_cast<World>(1 + draw(rng, 3));
    const auto m = std::get<NeighborhoodModel>(sample_model(rng, ModelClass::RawNeighborhood, n, {}));
    const auto r = nm_check_conditions(m);
    const auto o = oracle::conditions(oracle::from(m));
    EXPECT_EQ(r.c_holds, o.c);
    EXPECT_EQ(r.h_holds, o.h);
    EXPECT_EQ(r.t_holds, o.t);
    EXPECT_EQ(r.n_holds, o.n);
    if (r.c_witness) {
      const auto& w = *r.c_witness;
      EXPECT_TRUE(m.has_neighborhood(w.world, w.x) && m.has_neighborhood(w.world, w.y));
      EXPECT_FALSE(m.has_neighborhood(w.world, w.x & w.y));
    }
    if (r.h_witness) {
      const auto& w = *r.h_witness;
      EXPECT_TRUE(m.has_neighborhood(w.world, w.x));
      EXPECT_FALSE(m.has_neighborhood(w.world, w.x | w.y));
    }
    if (r.t_witness) {
      EXPECT_TRUE(m.has_neighborhood(r.t_witness->world, r.t_witness->x));
      EXPECT_FALSE(r.t_witness->x.contains(r.t_witness->world));
    }
    if (r.n_witness) EXPECT_FALSE(m.has_neighborhood(r.n_witness->world, m.universe()));
  }
}

TEST(Supplement, Examples) {
  const NeighborhoodModel m(2, {{ws({0})}, {ws({0, 1})}}, {});
  const auto s = supplement(m);
  EXPECT_EQ(s.neighborhoods(0), (Family{ws({0}), ws({0, 1})}));
  EXPECT_EQ(s.neighborhoods(1), (Family{ws({0, 1})}));

  const auto closed = two_world();
  EXPECT_EQ(supplement(closed), closed);

  const NeighborhoodModel empty(2, {{}, {}}, {});
  EXPECT_EQ(supplement(empty), empty);
}

TEST(Supplement, LemmaOnRandomModels) {
  Rng rng(99);
  int premise_cases = 0;
  for (int i = 0; i < 500; ++i) {
    const World n = static_cast<World>(1 + draw(rng, 3));
    const auto m = std::get<NeighborhoodModel>(sample_model(rng, ModelClass::RawNeighborhood, n, {0}));
    const auto s = supplement(m);
    EXPECT_EQ(supplement(s), s);
    EXPECT_TRUE(is_superset_closed(s));
    for (World w = 0; w < n; ++w) {
      for (WorldSet x : m.neighborhoods(w)) EXPECT_TRUE(s.has_neighborhood(w, x));
      // Superset closure, checked through the oracle's set type.
      for (WorldSet x : s.neighborhoods(w)) {
        for (const auto& y : oracle::all_subsets(static_cast<int>(n))) {
          if (oracle::subset(oracle::worlds_of(x), y)) {
            WorldSet yy;
            for (int z : y) yy = yy.with(static_cast<World>(z));
            EXPECT_TRUE(s.has_neighborhood(w, yy));
          }
        }
      }
    }
    const auto before = nm_check_conditions(m);
    if (before.c_holds && before.t_holds && before.n_holds) {
      ++premise_cases;
      EXPECT_TRUE(nm_check_conditions(s).all_hold());
    }
  }
  EXPECT_GT(premise_cases, 0);
}

TEST(FilterCollapse, CHNFamiliesArePrincipalFilters) {
  for (World n = 1; n <= 3; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
      Family f;
      for (std::uint64_t x = 0; x < subsets; ++x) {
        if (fam >> x & 1) f.push_back(WorldSet(x));
      }
      for (World a = 0; a < n; ++a) {
        std::vector<Family> s(n, Family{WorldSet::universe(n)});
        s[a] = f;
        const auto r = nm_check_conditions(NeighborhoodModel(n, s, {}));
        if (!(r.c_holds && r.h_holds && r.n_holds)) continue;
        WorldSet core = WorldSet::universe(n);
        for (WorldSet x : f) core = core & x;
        for (std::uint64_t x = 0; x < subsets; ++x) {
          EXPECT_EQ(core.subset_of(WorldSet(x)),
                    std::find(f.begin(), f.end(), WorldSet(x)) != f.end());
        }
        EXPECT_EQ(r.t_holds, core.contains(a));
      }
    }
  }
}

TEST(TruthSets, HomomorphismOnRandomModels) {
  Rng rng(1234);
  FormulaShape shape;
  shape.max_depth = 3;
  for (int i = 0; i < 300; ++i) {
    const World n = static_cast<World>(1 + draw(rng, 4));
    const auto m = std::get<NeighborhoodModel>(sample_model(rng, ModelClass::RawNeighborhood, n, {0, 1}));
    const Formula a = random_formula(rng, shape);
    const Formula b = random_formula(rng, shape);
    const WorldSet ta = truth_set(m, a), tb = truth_set(m, b);
    EXPECT_EQ(truth_set(m, Not(a)), ta.complement(n));
    EXPECT_EQ(truth_set(m, And(a, b)), ta & tb);
    EXPECT_EQ(truth_set(m, Or(a, b)), ta | tb);
    EXPECT_EQ(truth_set(m, Implies(a, b)), ta.complement(n) | tb);
    EXPECT_EQ(truth_set(m, Iff(a, b)), (ta.complement(n) | tb) & (tb.complement(n) | ta));
    WorldSet boxed;
    for (World w = 0; w < n; ++w) {
      if (m.has_neighborhood(w, ta)) boxed = boxed.with(w);
    }
    EXPECT_EQ(truth_set(m, Box(a)), boxed);
    EXPECT_EQ(extension(m, Box(a)), boxed);
    EXPECT_EQ(oracle::truth(oracle::from(m), a), oracle::worlds_of(ta));
  }
}

TEST(TruthSets, MonotoneUnderH) {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const World n = static_cast<World>(1 + draw(rng, 4));
    const auto m =
        std::get<NeighborhoodModel>(sample_model(rng, ModelClass::ConstrainedNeighborhood, n, {0, 1}));
    const Formula a = parse("p0 & p1"), b = parse("p0");
    ASSERT_TRUE(truth_set(m, a).subset_of(truth_set(m, b)));
    EXPECT_TRUE(truth_set(m, Box(a)).subset_of(truth_set(m, Box(b))));
  }
}

TEST(KripkeEval, Examples) {
  const KripkeModel empty(1, std::vector<std::pair<World, World>>{}, {});
  EXPECT_TRUE(km_eval(empty, 0, parse("[]false")));
  const KripkeModel loop(1, {{0, 0}}, {{0, ws({0})}});
  EXPECT_TRUE(km_eval(loop, 0, parse("<>p0")));
  const KripkeModel full(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{0, ws({0})}});
  EXPECT_FALSE(km_eval(full, 0, parse("[]p0")));
  EXPECT_THROW(km_eval(full, 0, parse("nabla p0")), DialectError);
  EXPECT_THROW(km_eval(full, 5, Top()), RangeError);
}

TEST(UniversalEval, Examples) {
  const UniversalModel m(2, {{0, ws({0})}});
  for (World w = 0; w < 2; ++w) EXPECT_TRUE(um_eval(m, w, parse("[]true")));
  EXPECT_TRUE(um_eval(m, 1, parse("<>p0")));
  EXPECT_TRUE(um_eval(m, 0, parse("[]p0 -> p0")));
  EXPECT_THROW(um_eval(m, 0, parse("nabla p0")), DialectError);
}

TEST(UniversalEval, AgreesWithFullRelation) {
  Rng rng(77);
  FormulaShape shape;
  shape.dialect = Dialect::S5;
  for (int i = 0; i < 300; ++i) {
    const World n = static_cast<World>(1 + draw(rng, 5));
    const auto m = std::get<UniversalModel>(sample_model(rng, ModelClass::Universal, n, {0, 1}));
    const Formula f = random_formula(rng, shape);
    const KripkeModel k = m.as_kripke();
    for (World w = 0; w < n; ++w) EXPECT_EQ(um_eval(m, w, f), km_eval(k, w, f)) << render(f);
    EXPECT_EQ(um_truth_set(m, f), extension(m, f));
  }
}

TEST(KripkeEval, AgreesWithOracle) {
  Rng rng(78);
  FormulaShape shape;
  shape.dialect = Dialect::S5;
  for (int i = 0; i < 300; ++i) {
    const World n = static_cast<World>(1 + draw(rng, 4));
    const auto m = std::get<KripkeModel>(sample_model(rng, ModelClass::KripkeAll, n, {0, 1}));
    const Formula f = random_formula(rng, shape);
    const auto o = oracle::from(m);
    for (World w = 0; w < n; ++w) EXPECT_EQ(km_eval(m, w, f), oracle::eval(o, static_cast<int>(w), f));
    EXPECT_EQ(km_truth_set(m, f), extension(m, f));
  }
}

TEST(Relations, Examples) {
  const KripkeModel full(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {});
  const auto p = relation_properties(full);
  EXPECT_TRUE(p.reflexive && p.euclidean && p.symmetric && p.transitive && p.equivalence);
  EXPECT_FALSE(relation_properties(KripkeModel(2, {{0, 0}}, {})).reflexive);
  EXPECT_FALSE(relation_properties(KripkeModel(2, {{0, 1}}, {})).euclidean);
}

TEST(Relations, AgreeWithOracleOnAllSmallRelations) {
  for (World n = 1; n <= 3; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      std::vector<std::pair<World, World>> pairs;
      for (World a = 0; a < n; ++a) {
        for (World b = 0; b < n; ++b) {
          if (bits >> (a * n + b) & 1) pairs.emplace_back(a, b);
        }
      }
      const KripkeModel m(n, pairs, {});
      const auto p = relation_properties(m);
      const auto o = oracle::relation(oracle::from(m));
      EXPECT_EQ(p.reflexive, o.reflexive);
      EXPECT_EQ(p.euclidean, o.euclidean);
      EXPECT_EQ(p.symmetric, o.symmetric);
      EXPECT_EQ(p.transitive, o.transitive);
      EXPECT_EQ(p.equivalence, o.reflexive && o.euclidean);
    }
  }
}
