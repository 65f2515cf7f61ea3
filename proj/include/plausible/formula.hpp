#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace plausible {

using AtomIndex = std::uint32_t;

enum class Kind : std::uint8_t {
  Atom,
  Top,
  Bottom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Box,
  Diamond,
  Nabla,
};

/// Immutable modal formula. Copies share structure; comparison is always
/// structural.
class Formula {
 public:
  static Formula atom(AtomIndex index);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula box(Formula operand);
  static Formula diamond(Formula operand);
  static Formula nabla(Formula operand);
  /// Builds a node of the given kind from its children. `rhs` is ignored for
  /// unary kinds; atoms and constants are not accepted here.
  static Formula make(Kind kind, Formula lhs, std::optional<Formula> rhs = {});

  Kind kind() const;
  /// Atom index; only meaningful when kind() == Kind::Atom.
  AtomIndex atom_index() const;
  /// The single operand of a unary node, or the left operand of a binary one.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_unary() const;
  bool is_binary() const;
  bool is_modal() const;

  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Short constructors for tests and fixture-building code.
inline Formula Atom(AtomIndex i) { return Formula::atom(i); }
inline Formula Top() { return Formula::top(); }
inline Formula Bottom() { return Formula::bottom(); }
inline Formula Not(Formula f) { return Formula::negation(std::move(f)); }
inline Formula And(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula Or(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }
inline Formula Implies(Formula a, Formula b) { return Formula::implication(std::move(a), std::move(b)); }
inline Formula Iff(Formula a, Formula b) { return Formula::biconditional(std::move(a), std::move(b)); }
inline Formula Box(Formula f) { return Formula::box(std::move(f)); }
inline Formula Diamond(Formula f) { return Formula::diamond(std::move(f)); }
inline Formula Nabla(Formula f) { return Formula::nabla(std::move(f)); }

// ---------------------------------------------------------------------------
// Concrete syntax
//
//   atoms      p0 p1 p2 ...
//   constants  true false
//   unary      ~  []  <>  nabla
//   binary     &  |  ->  <->     (precedence high to low; & and | associate
//                                 left, -> and <-> associate right)
//
// Whitespace is insignificant except as a token separator.

/// Throws ParseError on malformed input.
Formula parse(std::string_view text);

/// Canonical rendering with the fewest parentheses the grammar allows.
std::string render(const Formula& f);

// ---------------------------------------------------------------------------
// Schemas

/// Metavariable index; 0 renders as A, 1 as B, and so on.
using MetaVar = std::uint32_t;
using MetaBinding = std::map<MetaVar, Formula>;

/// A formula whose atoms are read as metavariables.
struct Schema {
  Formula pattern;

  friend bool operator==(const Schema&, const Schema&) = default;
};

/// Parses schema text in the formula grammar with uppercase letters A..Z as
/// metavariables; ordinary atoms are rejected.
Schema parse_schema(std::string_view text);
std::string render_schema(const Schema& s);

/// First-order matching. The returned binding covers exactly the
/// metavariables occurring in the schema.
std::optional<MetaBinding> match_schema(const Schema& s, const Formula& f);

/// Throws UnboundMetavariableError if the binding misses a metavariable.
Formula instantiate(const Schema& s, const MetaBinding& binding);

std::set<MetaVar> metavars_of(const Schema& s);

// ---------------------------------------------------------------------------
// Dialects

enum class Dialect { Classical, S5, NablaSystem, BoxSystem };

std::string_view dialect_name(Dialect d);

/// True iff every modal operator in f is admitted by d.
bool admits(Dialect d, const Formula& f);

/// The narrowest dialect admitting f: Classical, then BoxSystem, then S5, then
/// NablaSystem. Throws DialectError when Nabla is mixed with Box or Diamond.
Dialect dialect_of(const Formula& f);

/// Swaps Nabla and Box between NablaSystem and BoxSystem. Throws DialectError
/// if f is not admitted by `from`, or if from/to is not one of the two.
Formula translate(const Formula& f, Dialect from, Dialect to);

// ---------------------------------------------------------------------------
// Structural measures

int modal_depth(const Formula& f);
std::set<AtomIndex> atoms_of(const Formula& f);
std::set<Formula> subformulas(const Formula& f);
/// Number of nodes.
std::size_t formula_size(const Formula& f);

/// Replaces atoms by formulas (homomorphic substitution); atoms outside the
/// map are left unchanged.
Formula substitute(const Formula& f, const std::map<AtomIndex, Formula>& sub);

}  // namespace plausible

template <>
struct std::hash<plausible::Formula> {
  std::size_t operator()(const plausible::Formula& f) const noexcept { return f.hash(); }
};
