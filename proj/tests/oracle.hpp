#pragma once

// Naive reference semantics over std::set, written against the textbook
// clauses and independent of the bitmask engine. Tests compare the library
// against these.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "plausible/semantics.hpp"

namespace oracle {

using Worlds = std::set<int>;
using Neighborhoods = std::set<Worlds>;

inline Worlds worlds_of(plausible::WorldSet s) {
  Worlds out;
  for (auto w : s.to_vector()) out.insert(static_cast<int>(w));
  return out;
}

inline Worlds all_worlds(int n) {
  Worlds out;
  for (int w = 0; w < n; ++w) out.insert(w);
  return out;
}

inline bool subset(const Worlds& a, const Worlds& b) {
  for (int x : a) {
    if (!b.count(x)) return false;
  }
  return true;
}

inline std::vector<Worlds> all_subsets(int n) {
  std::vector<Worlds> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Worlds s;
    for (int w = 0; w < n; ++w) {
      if (mask & (1 << w)) s.insert(w);
    }
    out.push_back(s);
  }
  return out;
}

struct NModel {
  int n = 0;
  std::vector<Neighborhoods> S;
  std::map<unsigned, Worlds> V;
};

struct KModel {
  int n = 0;
  std::set<std::pair<int, int>> R;
  std::map<unsigned, Worlds> V;
};

inline std::map<unsigned, Worlds> valuation_of(const plausible::Valuation& v) {
  std::map<unsigned, Worlds> out;
  for (const auto& [a, s] : v) out[a] = worlds_of(s);
  return out;
}

inline NModel from(const plausible::NeighborhoodModel& m) {
  NModel o;
  o.n = static_cast<int>(m.world_count());
  for (int w = 0; w < o.n; ++w) {
    Neighborhoods fam;
    for (auto x : m.neighborhoods(static_cast<plausible::World>(w))) fam.insert(worlds_of(x));
    o.S.push_back(fam);
  }
  o.V = valuation_of(m.valuation());
  return o;
}

inline KModel from(const plausible::KripkeModel& m) {
  KModel o;
  o.n = static_cast<int>(m.world_count());
  for (auto [a, b] : m.pairs()) o.R.insert({static_cast<int>(a), static_cast<int>(b)});
  o.V = valuation_of(m.valuation());
  return o;
}

template <class M>
bool atom_true(const M& m, unsigned atom, int w) {
  auto it = m.V.find(atom);
  return it != m.V.end() && it->second.count(w);
}

inline bool eval(const NModel& m, int w, const plausible::Formula& f);

inline Worlds truth(const NModel& m, const plausible::Formula& f) {
  Worlds out;
  for (int w = 0; w < m.n; ++w) {
    if (eval(m, w, f)) out.insert(w);
  }
  return out;
}

inline bool eval(const NModel& m, int w, const plausible::Formula& f) {
  using plausible::Kind;
  switch (f.kind()) {
    case Kind::Atom: return atom_true(m, f.atom_index(), w);
    case Kind::Top: return true;
    case Kind::Bottom: return false;
    case Kind::Not: return !eval(m, w, f.lhs());
    case Kind::And: return eval(m, w, f.lhs()) && eval(m, w, f.rhs());
    case Kind::Or: return eval(m, w, f.lhs()) || eval(m, w, f.rhs());
    case Kind::Implies: return !eval(m, w, f.lhs()) || eval(m, w, f.rhs());
    case Kind::Iff: return eval(m, w, f.lhs()) == eval(m, w, f.rhs());
    case Kind::Box: return m.S[w].count(truth(m, f.lhs())) > 0;
    default: throw std::logic_error("oracle: operator outside the neighborhood language");
  }
}

inline bool eval(const KModel& m, int w, const plausible::Formula& f) {
  using plausible::Kind;
  switch (f.kind()) {
    case Kind::Atom: return atom_true(m, f.atom_index(), w);
    case Kind::Top: return true;
    case Kind::Bottom: return false;
    case Kind::Not: return !eval(m, w, f.lhs());
    case Kind::And: return eval(m, w, f.lhs()) && eval(m, w, f.rhs());
    case Kind::Or: return eval(m, w, f.lhs()) || eval(m, w, f.rhs());
    case Kind::Implies: return !eval(m, w, f.lhs()) || eval(m, w, f.rhs());
    case Kind::Iff: return eval(m, w, f.lhs()) == eval(m, w, f.rhs());
    case Kind::Box:
      for (int z = 0; z < m.n; ++z) {
        if (m.R.count({w, z}) && !eval(m, z, f.lhs())) return false;
      }
      return true;
    case Kind::Diamond:
      for (int z = 0; z < m.n; ++z) {
        if (m.R.count({w, z}) && eval(m, z, f.lhs())) return true;
      }
      return false;
    default: throw std::logic_error("oracle: nabla in a relational model");
  }
}

struct Conditions {
  bool c = true, h = true, t = true, n = true;
};

inline Conditions conditions(const NModel& m) {
  Conditions out;
  const auto subsets = all_subsets(m.n);
  const Worlds universe = all_worlds(m.n);
  for (int w = 0; w < m.n; ++w) {
    const auto& fam = m.S[w];
    for (const Worlds& x : fam) {
      if (!x.count(w)) out.t = false;
      for (const Worlds& y : fam) {
        Worlds both;
        for (int z : x) {
          if (y.count(z)) both.insert(z);
        }
        if (!fam.count(both)) out.c = false;
      }
      for (const Worlds& y : subsets) {
        Worlds either = x;
        either.insert(y.begin(), y.end());
        if (!fam.count(either)) out.h = false;
      }
    }
    if (!fam.count(universe)) out.n = false;
  }
  return out;
}

struct Relation {
  bool reflexive = true, euclidean = true, symmetric = true, transitive = true;
};

inline Relation relation(const KModel& m) {
  Relation r;
  for (int a = 0; a < m.n; ++a) {
    if (!m.R.count({a, a})) r.reflexive = false;
    for (int b = 0; b < m.n; ++b) {
      if (m.R.count({a, b}) && !m.R.count({b, a})) r.symmetric = false;
      for (int c = 0; c < m.n; ++c) {
        if (m.R.count({a, b}) && m.R.count({a, c}) && !m.R.count({b, c})) r.euclidean = false;
        if (m.R.count({a, b}) && m.R.count({b, c}) && !m.R.count({a, c})) r.transitive = false;
      }
    }
  }
  return r;
}

// Plausibility algebra over subsets of {0..k-1}; sharp indexed by bitmask.
struct Algebra {
  int k = 0;
  std::vector<Worlds> elements;  // index = bitmask
  std::vector<int> sharp;

  int index_of(const Worlds& s) const {
    int mask = 0;
    for (int x : s) mask |= 1 << x;
    return mask;
  }
  const Worlds& sh(int a) const { return elements[sharp[a]]; }
};

inline Algebra algebra(int k, std::vector<int> sharp) {
  return Algebra{k, all_subsets(k), std::move(sharp)};
}

inline Worlds meet(const Worlds& a, const Worlds& b) {
  Worlds out;
  for (int x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

inline Worlds join(const Worlds& a, const Worlds& b) {
  Worlds out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline bool axioms_hold(const Algebra& A) {
  const int size = 1 << A.k;
  for (int a = 0; a < size; ++a) {
    if (!subset(A.sh(a), A.elements[a])) return false;
    for (int b = 0; b < size; ++b) {
      const int ab = A.index_of(meet(A.elements[a], A.elements[b]));
      const int aorb = A.index_of(join(A.elements[a], A.elements[b]));
      if (!subset(meet(A.sh(a), A.sh(b)), A.sh(ab))) return false;
      if (!subset(A.sh(a), A.sh(aorb))) return false;
    }
  }
  return A.sharp[size - 1] == size - 1;
}

}  // namespace oracle
