#include "plausible/error.hpp"
#include "plausible/formula.hpp"

namespace plausible {

namespace {

bool match_into(const Formula& pattern, const Formula& f, MetaBinding& binding) {
  if (pattern.kind() == Kind::Atom) {
    auto [it, inserted] = binding.emplace(pattern.atom_index(), f);
    return inserted || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  if (pattern.kind() == Kind::Top || pattern.kind() == Kind::Bottom) return true;
  if (!match_into(pattern.lhs(), f.lhs(), binding)) return false;
  return !pattern.is_binary() || match_into(pattern.rhs(), f.rhs(), binding);
}

}  // namespace

std::optional<MetaBinding> match_schema(const Schema& s, const Formula& f) {
  MetaBinding binding;
  if (!match_into(s.pattern, f, binding)) return std::nullopt;
  return binding;
}

Formula instantiate(const Schema& s, const MetaBinding& binding) {
  std::map<AtomIndex, Formula> sub;
  for (MetaVar v : metavars_of(s)) {
    auto it = binding.find(v);
    if (it == binding.end()) {
      throw UnboundMetavariableError("metavariable " + render_schema(Schema{Atom(v)}) +
                                     " is unbound in " + render_schema(s));
    }
    sub.emplace(v, it->second);
  }
  return substitute(s.pattern, sub);
}

std::set<MetaVar> metavars_of(const Schema& s) { return atoms_of(s.pattern); }

}  // namespace plausible
