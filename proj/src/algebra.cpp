#include "plausible/algebra.hpp"

#include "plausible/error.hpp"

namespace plausible {

FinitePlausibilityAlgebra::FinitePlausibilityAlgebra(unsigned base_size, std::vector<Element> sharp)
    : base_size_(base_size), sharp_(std::move(sharp)) {
  if (base_size == 0 || base_size > kMaxAlgebraBase) {
    throw RangeError("algebra base must be in 1.." + std::to_string(kMaxAlgebraBase));
  }
  const std::size_t carrier = std::size_t{1} << base_size;
  if (sharp_.size() != carrier) {
    throw RangeError("sharp table needs " + std::to_string(carrier) + " entries, got " +
                     std::to_string(sharp_.size()));
  }
  for (Element e : sharp_) {
    if (e >= carrier) throw RangeError("sharp maps to " + std::to_string(e) + ", outside the carrier");
  }
}

FinitePlausibilityAlgebra identity_algebra(unsigned base_size) {
  std::vector<Element> sharp(std::size_t{1} << base_size);
  for (std::size_t i = 0; i < sharp.size(); ++i) sharp[i] = static_cast<Element>(i);
  return FinitePlausibilityAlgebra(base_size, std::move(sharp));
}

AlgebraReport check_algebra(const FinitePlausibilityAlgebra& alg) {
  AlgebraReport r;
  const auto n = static_cast<Element>(alg.carrier_size());
  for (Element a = 0; a < n; ++a) {
    if (r.a3 && !alg.leq(alg.sharp(a), a)) {
      r.a3 = false;
      r.a3_witness = ElementPair{a, 0};
    }
    for (Element b = 0; b < n; ++b) {
      if (r.a1 && !alg.leq(alg.meet(alg.sharp(a), alg.sharp(b)), alg.sharp(alg.meet(a, b)))) {
        r.a1 = false;
        r.a1_witness = ElementPair{a, b};
      }
      if (r.a2 && !alg.leq(alg.sharp(a), alg.sharp(alg.join(a, b)))) {
        r.a2 = false;
        r.a2_witness = ElementPair{a, b};
      }
    }
  }
  if (alg.sharp(alg.one()) != alg.one()) {
    r.a4 = false;
    r.a4_witness = ElementPair{alg.one(), 0};
  }
  return r;
}

namespace {

void require_valid(const FinitePlausibilityAlgebra& alg) {
  const AlgebraReport r = check_algebra(alg);
  if (r.valid()) return;
  std::string failed;
  if (!r.a1) failed += " a1";
  if (!r.a2) failed += " a2";
  if (!r.a3) failed += " a3";
  if (!r.a4) failed += " a4";
  throw InvalidAlgebraError("not a plausibility algebra; fails" + failed);
}

}  // namespace

std::vector<Element> plausible_elements(const FinitePlausibilityAlgebra& alg) {
  require_valid(alg);
  std::vector<Element> out;
  for (Element x = 1; x < alg.carrier_size(); ++x) {
    if (alg.sharp(x) == x) out.push_back(x);
  }
  return out;
}

DerivedLawsReport check_derived_laws(const FinitePlausibilityAlgebra& alg) {
  require_valid(alg);
  DerivedLawsReport r;
  const auto n = static_cast<Element>(alg.carrier_size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (r.upward && !alg.leq(alg.sharp(a), alg.sharp(alg.join(a, b)))) {
        r.upward = false;
        r.upward_witness = ElementPair{a, b};
      }
      if (r.monotone && alg.leq(a, b) && !alg.leq(alg.sharp(a), alg.sharp(b))) {
        r.monotone = false;
        r.monotone_witness = ElementPair{a, b};
      }
      if (r.join_bound &&
          !alg.leq(alg.join(alg.sharp(a), alg.sharp(b)), alg.sharp(alg.join(a, b)))) {
        r.join_bound = false;
        r.join_bound_witness = ElementPair{a, b};
      }
    }
  }
  return r;
}

namespace {

Element eval(const FinitePlausibilityAlgebra& alg, const Assignment& v, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.find(f.atom_index());
      return it == v.end() ? alg.zero() : it->second;
    }
    case Kind::Top: return alg.one();
    case Kind::Bottom: return alg.zero();
    case Kind::Not: return alg.complement(eval(alg, v, f.lhs()));
    case Kind::And: return alg.meet(eval(alg, v, f.lhs()), eval(alg, v, f.rhs()));
    case Kind::Or: return alg.join(eval(alg, v, f.lhs()), eval(alg, v, f.rhs()));
    case Kind::Implies: return alg.join(alg.complement(eval(alg, v, f.lhs())), eval(alg, v, f.rhs()));
    case Kind::Iff: {
      const Element x = eval(alg, v, f.lhs());
      const Element y = eval(alg, v, f.rhs());
      return alg.meet(alg.join(alg.complement(x), y), alg.join(alg.complement(y), x));
    }
    case Kind::Nabla: return alg.sharp(eval(alg, v, f.lhs()));
    case Kind::Box:
    case Kind::Diamond: break;
  }
  throw DialectError("algebraic evaluation reads only nabla");
}

void require_nabla_dialect(const Formula& f) {
  if (!admits(Dialect::NablaSystem, f)) {
    throw DialectError("algebraic evaluation needs a NablaSystem formula: " + render(f));
  }
}

}  // namespace

Element alg_eval(const FinitePlausibilityAlgebra& alg, const Assignment& assignment, const Formula& f) {
  require_nabla_dialect(f);
  require_valid(alg);
  for (const auto& [atom, value] : assignment) {
    if (value >= alg.carrier_size()) throw RangeError("assignment value outside the carrier");
  }
  return eval(alg, assignment, f);
}

bool alg_validates(const FinitePlausibilityAlgebra& alg, const Formula& f) {
  require_nabla_dialect(f);
  require_valid(alg);
  const std::set<AtomIndex> atom_set = atoms_of(f);
  const std::vector<AtomIndex> atoms(atom_set.begin(), atom_set.end());
  const std::size_t carrier = alg.carrier_size();
  // Odometer over carrier^|atoms|.
  std::vector<Element> digits(atoms.size(), 0);
  for (;;) {
    Assignment v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = digits[i];
    if (eval(alg, v, f) != alg.one()) return false;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == carrier) digits[i++] = 0;
    if (i == digits.size()) return true;
  }
}

std::vector<FinitePlausibilityAlgebra> all_sharp_maps(unsigned base_size) {
  if (base_size == 0 || base_size > 2) throw RangeError("sharp-map enumeration supports k = 1 or 2");
  const std::size_t carrier = std::size_t{1} << base_size;
  std::size_t total = 1;
  for (std::size_t i = 0; i < carrier; ++i) total *= carrier;
  std::vector<FinitePlausibilityAlgebra> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Element> sharp(carrier);
    std::size_t rest = code;
    for (std::size_t i = carrier; i-- > 0;) {
      sharp[i] = static_cast<Element>(rest % carrier);
      rest /= carrier;
    }
    out.emplace_back(base_size, std::move(sharp));
  }
  return out;
}

std::vector<FinitePlausibilityAlgebra> valid_algebras(unsigned base_size) {
  std::vector<FinitePlausibilityAlgebra> out;
  for (auto& alg : all_sharp_maps(base_size)) {
    if (check_algebra(alg).valid()) out.push_back(std::move(alg));
  }
  return out;
}

}  // namespace plausible
