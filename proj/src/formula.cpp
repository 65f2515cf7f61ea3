#include "plausible/formula.hpp"

#include <cassert>

#include "plausible/error.hpp"

namespace plausible {

struct Formula::Node {
  Kind kind;
  AtomIndex index = 0;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool kind_is_unary(Kind k) {
  return k == Kind::Not || k == Kind::Box || k == Kind::Diamond || k == Kind::Nabla;
}

bool kind_is_binary(Kind k) {
  return k == Kind::And || k == Kind::Or || k == Kind::Implies || k == Kind::Iff;
}

}  // namespace

Formula Formula::atom(AtomIndex index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->index = index;
  n->hash = mix(mix(0, static_cast<std::size_t>(Kind::Atom)), index);
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    n->hash = mix(0, static_cast<std::size_t>(Kind::Top));
    return Formula(std::move(n));
  }();
  return t;
}

Formula Formula::bottom() {
  static const Formula b = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bottom;
    n->hash = mix(0, static_cast<std::size_t>(Kind::Bottom));
    return Formula(std::move(n));
  }();
  return b;
}

Formula Formula::make(Kind kind, Formula lhs, std::optional<Formula> rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->hash = mix(mix(0, static_cast<std::size_t>(kind)), lhs.hash());
  n->size = 1 + lhs.node_->size;
  if (kind_is_binary(kind)) {
    if (!rhs) throw Error("binary connective built without a right operand");
    n->hash = mix(n->hash, rhs->hash());
    n->size += rhs->node_->size;
    n->rhs = std::move(rhs);
  } else if (!kind_is_unary(kind)) {
    throw Error("Formula::make called with a nullary kind");
  }
  n->lhs = std::move(lhs);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula operand) { return make(Kind::Not, std::move(operand)); }
Formula Formula::box(Formula operand) { return make(Kind::Box, std::move(operand)); }
Formula Formula::diamond(Formula operand) { return make(Kind::Diamond, std::move(operand)); }
Formula Formula::nabla(Formula operand) { return make(Kind::Nabla, std::move(operand)); }
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Kind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Kind::Implies, std::move(lhs), std::move(rhs));
}
Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return make(Kind::Iff, std::move(lhs), std::move(rhs));
}

Kind Formula::kind() const { return node_->kind; }
AtomIndex Formula::atom_index() const { return node_->index; }
const Formula& Formula::lhs() const {
  assert(node_->lhs);
  return *node_->lhs;
}
const Formula& Formula::rhs() const {
  assert(node_->rhs);
  return *node_->rhs;
}
bool Formula::is_unary() const { return kind_is_unary(node_->kind); }
bool Formula::is_binary() const { return kind_is_binary(node_->kind); }
bool Formula::is_modal() const {
  return node_->kind == Kind::Box || node_->kind == Kind::Diamond || node_->kind == Kind::Nabla;
}
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  switch (a.node_->kind) {
    case Kind::Atom:
      return a.node_->index <=> b.node_->index;
    case Kind::Top:
    case Kind::Bottom:
      return std::strong_ordering::equal;
    default:
      break;
  }
  if (auto c = *a.node_->lhs <=> *b.node_->lhs; c != 0) return c;
  if (a.node_->rhs) return *a.node_->rhs <=> *b.node_->rhs;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

std::string_view dialect_name(Dialect d) {
  switch (d) {
    case Dialect::Classical: return "Classical";
    case Dialect::S5: return "S5";
    case Dialect::NablaSystem: return "NablaSystem";
    case Dialect::BoxSystem: return "BoxSystem";
  }
  return "?";
}

namespace {

struct ModalUse {
  bool box = false;
  bool diamond = false;
  bool nabla = false;
};

void collect_modal_use(const Formula& f, ModalUse& use) {
  switch (f.kind()) {
    case Kind::Box: use.box = true; break;
    case Kind::Diamond: use.diamond = true; break;
    case Kind::Nabla: use.nabla = true; break;
    default: break;
  }
  if (f.is_unary() || f.is_binary()) collect_modal_use(f.lhs(), use);
  if (f.is_binary()) collect_modal_use(f.rhs(), use);
}

}  // namespace

bool admits(Dialect d, const Formula& f) {
  ModalUse use;
  collect_modal_use(f, use);
  switch (d) {
    case Dialect::Classical: return !use.box && !use.diamond && !use.nabla;
    case Dialect::S5: return !use.nabla;
    case Dialect::NablaSystem: return !use.box && !use.diamond;
    case Dialect::BoxSystem: return !use.diamond && !use.nabla;
  }
  return false;
}

Dialect dialect_of(const Formula& f) {
  ModalUse use;
  collect_modal_use(f, use);
  if (use.nabla && (use.box || use.diamond)) {
    throw DialectError("formula mixes nabla with [] or <>: " + render(f));
  }
  if (use.nabla) return Dialect::NablaSystem;
  if (use.diamond) return Dialect::S5;
  if (use.box) return Dialect::BoxSystem;
  return Dialect::Classical;
}

namespace {

Formula swap_modality(const Formula& f, Kind from, Kind to) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bottom:
      return f;
    default:
      break;
  }
  Formula lhs = swap_modality(f.lhs(), from, to);
  if (f.is_binary()) return Formula::make(f.kind(), lhs, swap_modality(f.rhs(), from, to));
  return Formula::make(f.kind() == from ? to : f.kind(), lhs);
}

}  // namespace

Formula translate(const Formula& f, Dialect from, Dialect to) {
  auto is_pair_member = [](Dialect d) {
    return d == Dialect::NablaSystem || d == Dialect::BoxSystem;
  };
  if (!is_pair_member(from) || !is_pair_member(to)) {
    throw DialectError("translation is defined only between NablaSystem and BoxSystem");
  }
  if (!admits(from, f)) {
    throw DialectError("formula is not in the " + std::string(dialect_name(from)) +
                       " dialect: " + render(f));
  }
  if (from == to) return f;
  return from == Dialect::NablaSystem ? swap_modality(f, Kind::Nabla, Kind::Box)
                                      : swap_modality(f, Kind::Box, Kind::Nabla);
}

// ---------------------------------------------------------------------------

int modal_depth(const Formula& f) {
  if (f.is_binary()) return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  if (f.is_unary()) return modal_depth(f.lhs()) + (f.is_modal() ? 1 : 0);
  return 0;
}

namespace {

void collect_atoms(const Formula& f, std::set<AtomIndex>& out) {
  if (f.kind() == Kind::Atom) {
    out.insert(f.atom_index());
    return;
  }
  if (f.is_unary() || f.is_binary()) collect_atoms(f.lhs(), out);
  if (f.is_binary()) collect_atoms(f.rhs(), out);
}

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is_unary() || f.is_binary()) collect_subformulas(f.lhs(), out);
  if (f.is_binary()) collect_subformulas(f.rhs(), out);
}

std::size_t count_nodes(const Formula& f) {
  std::size_t n = 1;
  if (f.is_unary() || f.is_binary()) n += count_nodes(f.lhs());
  if (f.is_binary()) n += count_nodes(f.rhs());
  return n;
}

}  // namespace

std::set<AtomIndex> atoms_of(const Formula& f) {
  std::set<AtomIndex> out;
  collect_atoms(f, out);
  return out;
}

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return out;
}

std::size_t formula_size(const Formula& f) { return count_nodes(f); }

Formula substitute(const Formula& f, const std::map<AtomIndex, Formula>& sub) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = sub.find(f.atom_index());
      return it == sub.end() ? f : it->second;
    }
    case Kind::Top:
    case Kind::Bottom:
      return f;
    default:
      break;
  }
  Formula lhs = substitute(f.lhs(), sub);
  if (f.is_binary()) return Formula::make(f.kind(), lhs, substitute(f.rhs(), sub));
  return Formula::make(f.kind(), lhs);
}

}  // namespace plausible
