#include <map>

#include "plausible/proof.hpp"

namespace plausible {

// |- a -> a
std::size_t derive_identity(ProofBuilder& b, const Formula& a) {
  const Formula aa = Implies(a, a);
  const std::size_t l1 = b.axiom("PL2", {{0, a}, {1, aa}, {2, a}});
  const std::size_t l2 = b.axiom("PL1", {{0, a}, {1, aa}});
  const std::size_t l3 = b.mp(l2, l1);
  const std::size_t l4 = b.axiom("PL1", {{0, a}, {1, a}});
  return b.mp(l4, l3);
}

// From lines x -> y and y -> z, derive x -> z.
std::size_t derive_syllogism(ProofBuilder& b, std::size_t xy, std::size_t yz) {
  const Formula& first = b.formula(xy);
  const Formula& second = b.formula(yz);
  const Formula x = first.lhs();
  const Formula y = first.rhs();
  const Formula z = second.rhs();
  const std::size_t l1 = b.axiom("PL1", {{0, second}, {1, x}});
  const std::size_t l2 = b.mp(yz, l1);
  const std::size_t l3 = b.axiom("PL2", {{0, x}, {1, y}, {2, z}});
  const std::size_t l4 = b.mp(l2, l3);
  return b.mp(xy, l4);
}

// From lines a -> b and b -> a, derive a <-> b.
std::size_t derive_biconditional(ProofBuilder& b, std::size_t ab, std::size_t ba) {
  const Formula x = b.formula(ab).lhs();
  const Formula y = b.formula(ab).rhs();
  const std::size_t l1 = b.axiom("PL12", {{0, x}, {1, y}});
  const std::size_t l2 = b.mp(ab, l1);
  return b.mp(ba, l2);
}

// |- X -> true
std::size_t derive_implies_top(ProofBuilder& b, const Formula& x) {
  const std::size_t top = b.axiom("PL13", Top());
  const std::size_t weak = b.axiom("PL1", {{0, Top()}, {1, x}});
  return b.mp(top, weak);
}

namespace {

// LPBox: [](a | ~a) from N.
std::size_t bridge_ax2_to_box(ProofBuilder& b, const Formula& a) {
  const Formula x = Or(a, Not(a));
  const std::size_t em = b.axiom("PL15", MetaBinding{{0, a}});
  const std::size_t weak = b.axiom("PL1", {{0, x}, {1, Top()}});
  const std::size_t top_x = b.mp(em, weak);
  const std::size_t x_top = derive_implies_top(b, x);
  const std::size_t iff = derive_biconditional(b, top_x, x_top);
  const std::size_t boxed = b.re(iff);
  const std::size_t elim = b.axiom("PL10", {{0, Box(Top())}, {1, Box(x)}});
  const std::size_t forward = b.mp(boxed, elim);
  const std::size_t n = b.axiom("N", Box(Top()));
  return b.mp(n, forward);
}

// LNabla: produce nabla(true) from Ax2 at true.
std::size_t bridge_n_to_nabla(ProofBuilder& b) {
  const Formula x = Or(Top(), Not(Top()));
  const std::size_t ax2 = b.axiom("Ax2", MetaBinding{{0, Top()}});
  const std::size_t x_top = derive_implies_top(b, x);
  const std::size_t lifted = b.rnabla(x_top);
  return b.mp(ax2, lifted);
}

// LNabla: produce nabla a | nabla c -> nabla(a | c).
std::size_t bridge_h_to_nabla(ProofBuilder& b, const Formula& a, const Formula& c) {
  const Formula x = Or(a, c);
  const std::size_t left = b.rnabla(b.axiom("PL7", {{0, a}, {1, c}}));
  const std::size_t right = b.rnabla(b.axiom("PL8", {{0, a}, {1, c}}));
  const std::size_t cases = b.axiom("PL9", {{0, Nabla(a)}, {1, Nabla(c)}, {2, Nabla(x)}});
  return b.mp(right, b.mp(left, cases));
}

// LPBox: from premise-free line a -> c, produce []a -> []c.
std::size_t bridge_rnabla_to_box(ProofBuilder& b, std::size_t ac) {
  const Formula a = b.formula(ac).lhs();
  const Formula c = b.formula(ac).rhs();
  const Formula x = Or(a, c);
  // c <-> a | c
  const std::size_t cases = b.axiom("PL9", {{0, a}, {1, c}, {2, c}});
  const std::size_t partial = b.mp(ac, cases);
  const std::size_t x_c = b.mp(derive_identity(b, c), partial);
  const std::size_t c_x = b.axiom("PL8", {{0, a}, {1, c}});
  const std::size_t iff = derive_biconditional(b, c_x, x_c);
  // []c <-> [](a | c), read backwards
  const std::size_t boxed = b.re(iff);
  const std::size_t back = b.mp(boxed, b.axiom("PL11", {{0, Box(c)}, {1, Box(x)}}));
  // []a -> []a | []c -> [](a | c) -> []c
  const std::size_t h = b.axiom("H", {{0, a}, {1, c}});
  const std::size_t intro = b.axiom("PL7", {{0, Box(a)}, {1, Box(c)}});
  const std::size_t to_x = derive_syllogism(b, intro, h);
  return derive_syllogism(b, to_x, back);
}

// LNabla: from premise-free line a <-> c, produce nabla a <-> nabla c.
std::size_t bridge_re_to_nabla(ProofBuilder& b, std::size_t ac) {
  const Formula a = b.formula(ac).lhs();
  const Formula c = b.formula(ac).rhs();
  const std::size_t fwd = b.rnabla(b.mp(ac, b.axiom("PL10", {{0, a}, {1, c}})));
  const std::size_t bwd = b.rnabla(b.mp(ac, b.axiom("PL11", {{0, a}, {1, c}})));
  return derive_biconditional(b, fwd, bwd);
}

}  // namespace

ProofTranslation translate_proof_detailed(const Proof& p) {
  if (p.system != SystemId::LNabla && p.system != SystemId::LPBox) {
    throw TranslationError("only LNabla and LPBox proofs translate; got " +
                           std::string(system_name(p.system)));
  }
  const Verdict verdict = check_proof(p);
  if (!verdict.accepted) {
    throw TranslationError("source proof is rejected at line " +
                           std::to_string(verdict.failing_line) + ": " + verdict.reason);
  }
  const bool to_box = p.system == SystemId::LNabla;
  const Dialect from = to_box ? Dialect::NablaSystem : Dialect::BoxSystem;
  const Dialect to = to_box ? Dialect::BoxSystem : Dialect::NablaSystem;
  auto tr = [&](const Formula& f) { return translate(f, from, to); };

  std::vector<Formula> premises;
  for (const Formula& f : p.premises) premises.push_back(tr(f));
  ProofBuilder b(to_box ? SystemId::LPBox : SystemId::LNabla, premises);

  ProofTranslation out;
  std::vector<std::size_t> where(p.lines.size() + 1, 0);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const std::size_t number = i + 1;
    const ProofLine& line = p.lines[i];
    const Justification& j = line.justification;
    const Formula target = tr(line.formula);
    const std::size_t before = b.size();
    std::string bridge;

    switch (j.rule) {
      case Rule::Premise:
        where[number] = b.premise(target);
        break;
      case Rule::MP:
        where[number] = b.mp(where[j.refs[0]], where[j.refs[1]]);
        break;
      case Rule::RNabla:
        where[number] = bridge_rnabla_to_box(b, where[j.refs[0]]);
        bridge = "RNabla via RE+H";
        break;
      case Rule::RE:
        where[number] = bridge_re_to_nabla(b, where[j.refs[0]]);
        bridge = "RE via RNabla";
        break;
      case Rule::Axiom: {
        const std::string id =
            j.schema_id.empty() ? is_axiom_instance(p.system, line.formula)->schema_id : j.schema_id;
        if (id.starts_with("PL")) {
          where[number] = b.axiom(id, target);
        } else if (id == "Ax1") {
          where[number] = b.axiom("C", target);
        } else if (id == "C") {
          where[number] = b.axiom("Ax1", target);
        } else if (id == "Ax3") {
          where[number] = b.axiom("T", target);
        } else if (id == "T") {
          where[number] = b.axiom("Ax3", target);
        } else if (id == "Ax2") {
          where[number] = bridge_ax2_to_box(b, target.lhs().lhs());
          bridge = "Ax2 via N";
        } else if (id == "N") {
          where[number] = bridge_n_to_nabla(b);
          bridge = "N via Ax2";
        } else if (id == "H") {
          where[number] = bridge_h_to_nabla(b, target.lhs().lhs().lhs(), target.lhs().rhs().lhs());
          bridge = "H via RNabla";
        } else {
          throw TranslationError("line " + std::to_string(number) + ": no counterpart for axiom " + id);
        }
        break;
      }
      case Rule::RN:
        throw TranslationError("line " + std::to_string(number) + ": rn has no counterpart");
    }
    if (b.formula(where[number]) != target) {
      throw TranslationError("line " + std::to_string(number) + ": bridge for " + bridge +
                             " ended at the wrong formula");
    }
    if (!bridge.empty()) out.bridges.push_back({number, bridge, before + 1, b.size()});
  }

  // Every bridge ends on its result line, so the last emitted line carries
  // the translated conclusion.
  out.proof = b.finish();
  if (out.proof.conclusion != tr(p.conclusion)) {
    throw TranslationError("translated proof does not end at the translated conclusion");
  }
  return out;
}

Proof translate_proof(const Proof& p) { return translate_proof_detailed(p).proof; }

}  // namespace plausible
