#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "plausible/formula.hpp"

namespace plausible {

/// Element of the powerset algebra over a k-element base: a bitmask below
/// 2^k. 0 is the bottom element, 2^k - 1 the top.
using Element = std::uint32_t;

/// Largest base the algebra routines accept (carrier of 2^k elements).
inline constexpr unsigned kMaxAlgebraBase = 8;

/// Powerset Boolean algebra with a plausibility operator `sharp`.
class FinitePlausibilityAlgebra {
 public:
  /// Throws RangeError unless sharp has exactly 2^k entries, each below 2^k,
  /// and 1 <= k <= kMaxAlgebraBase.
  FinitePlausibilityAlgebra(unsigned base_size, std::vector<Element> sharp);

  unsigned base_size() const { return base_size_; }
  std::size_t carrier_size() const { return sharp_.size(); }
  Element zero() const { return 0; }
  Element one() const { return static_cast<Element>(sharp_.size() - 1); }
  Element sharp(Element a) const { return sharp_.at(a); }
  const std::vector<Element>& sharp_table() const { return sharp_; }

  Element meet(Element a, Element b) const { return a & b; }
  Element join(Element a, Element b) const { return a | b; }
  Element complement(Element a) const { return ~a & one(); }
  bool leq(Element a, Element b) const { return (a & ~b) == 0; }

  friend bool operator==(const FinitePlausibilityAlgebra&, const FinitePlausibilityAlgebra&) = default;

 private:
  unsigned base_size_;
  std::vector<Element> sharp_;
};

/// Identity-sharp algebra over a k-element base.
FinitePlausibilityAlgebra identity_algebra(unsigned base_size);

struct ElementPair {
  Element a = 0;
  Element b = 0;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
};

/// a1: #a & #b <= #(a & b)    a2: #a <= #(a | b)
/// a3: #a <= a                a4: #1 = 1
/// Witnesses are the first failing pair in (a, b) order; a3 and a4 witnesses
/// carry the offending element in `a`.
struct AlgebraReport {
  bool a1 = true, a2 = true, a3 = true, a4 = true;
  std::optional<ElementPair> a1_witness, a2_witness, a3_witness, a4_witness;

  bool valid() const { return a1 && a2 && a3 && a4; }
};

AlgebraReport check_algebra(const FinitePlausibilityAlgebra& a);

/// {x : x != 0 and #x = x}. Throws InvalidAlgebraError if a fails a1-a4.
std::vector<Element> plausible_elements(const FinitePlausibilityAlgebra& a);

/// (i) #a <= #(a | b); (ii) a <= b implies #a <= #b; (iii) #a | #b <= #(a | b).
struct DerivedLawsReport {
  bool upward = true;      // (i)
  bool monotone = true;    // (ii)
  bool join_bound = true;  // (iii)
  std::optional<ElementPair> upward_witness, monotone_witness, join_bound_witness;

  bool all_hold() const { return upward && monotone && join_bound; }
};

/// Throws InvalidAlgebraError if a fails a1-a4. A failing law on a valid
/// algebra is returned as-is; callers treat it as a contradiction.
DerivedLawsReport check_derived_laws(const FinitePlausibilityAlgebra& a);

using Assignment = std::map<AtomIndex, Element>;

/// Homomorphic evaluation with nabla read as sharp. Unassigned atoms are 0.
/// Throws DialectError outside NablaSystem and InvalidAlgebraError if a
/// fails a1-a4.
Element alg_eval(const FinitePlausibilityAlgebra& a, const Assignment& assignment, const Formula& f);

/// f evaluates to 1 under every assignment of its atoms.
bool alg_validates(const FinitePlausibilityAlgebra& a, const Formula& f);

/// Every sharp map on the 2^k carrier, in lexicographic order of the table
/// with element 0 most significant. (2^k)^(2^k) candidates; k <= 2.
std::vector<FinitePlausibilityAlgebra> all_sharp_maps(unsigned base_size);

/// all_sharp_maps filtered by check_algebra.
std::vector<FinitePlausibilityAlgebra> valid_algebras(unsigned base_size);

}  // namespace plausible
