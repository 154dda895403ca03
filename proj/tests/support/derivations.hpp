// Programmatic proof-script builders shared by tests: derivations that would
// be unreasonable to keep as text because their terms carry huge numerals.

#ifndef PACHECK_TESTS_DERIVATIONS_HPP
#define PACHECK_TESTS_DERIVATIONS_HPP

#include "pacheck/kernel.hpp"
#include "pacheck/script.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck::testing {

inline Justification j_axiom(AxiomTag tag) {
  Justification j;
  j.kind = Justification::Kind::Axiom;
  j.tag = tag;
  return j;
}

inline Justification j_mp(std::int64_t i, std::int64_t jj) {
  Justification j;
  j.kind = Justification::Kind::MP;
  j.i = i;
  j.j = jj;
  return j;
}

inline Justification j_gen(std::int64_t i, VarIndex v) {
  Justification j;
  j.kind = Justification::Kind::Gen;
  j.i = i;
  j.var = v;
  return j;
}

// (t = t) for any closed term t, from A5 and A1 via GEN, K4 and MP; the same
// sixteen-line shape as corpus/reflexivity-at-3.prf, but t may be a numeral
// with astronomically many successors.
inline ProofScript make_reflexivity_proof(const Term& t, const std::string& name) {
  ProofScript s;
  s.name = name;
  s.system = "PA";
  const Formula a5 = axiom_formula(AxiomTag::A5);
  const Formula a1 = axiom_formula(AxiomTag::A1);
  const Term t_plus_0 = mk_add(t, mk_zero());
  auto push = [&s](std::int64_t idx, Formula f, Justification j) {
    s.lines.push_back({idx, std::move(f), std::move(j)});
  };
  // ((t + 0) = t)
  push(1, a5, j_axiom(AxiomTag::A5));
  push(2, mk_forall(1, a5), j_gen(1, 1));
  Formula a5_at_t = mk_eq(t_plus_0, t);
  push(3, mk_implies(mk_forall(1, a5), a5_at_t), j_axiom(AxiomTag::K4));
  push(4, a5_at_t, j_mp(2, 3));
  // A1 at x1 := (t + 0)
  push(5, a1, j_axiom(AxiomTag::A1));
  push(6, mk_forall(1, a1), j_gen(5, 1));
  Formula a1_t = substitute(a1, 1, t_plus_0);
  push(7, mk_implies(mk_forall(1, a1), a1_t), j_axiom(AxiomTag::K4));
  push(8, a1_t, j_mp(6, 7));
  // then x2 := t
  push(9, mk_forall(2, a1_t), j_gen(8, 2));
  Formula a1_tt = substitute(a1_t, 2, t);
  push(10, mk_implies(mk_forall(2, a1_t), a1_tt), j_axiom(AxiomTag::K4));
  push(11, a1_tt, j_mp(9, 10));
  // discharge the first antecedent ((t + 0) = t)
  Formula rest = a1_tt->g;  // (((t + 0) = x3) -> (t = x3))
  push(12, rest, j_mp(4, 11));
  // then x3 := t
  push(13, mk_forall(3, rest), j_gen(12, 3));
  Formula rest_t = substitute(rest, 3, t);
  push(14, mk_implies(mk_forall(3, rest), rest_t), j_axiom(AxiomTag::K4));
  push(15, rest_t, j_mp(13, 14));
  push(16, mk_eq(t, t), j_mp(4, 15));
  return s;
}

}  // namespace pacheck::testing

#endif
