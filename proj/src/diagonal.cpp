#include "pacheck/diagonal.hpp"

namespace pacheck {

namespace {

void require_two_free(const Formula& w, const char* who) {
  auto fv = free_vars(w);
  if (fv != std::set<VarIndex>{1, 2})
    throw Error(std::string(who) + ": formula must have free variables exactly {x1, x2}");
}

}  // namespace

DiagonalResult goedel_sentence(const Formula& w, Codec codec) {
  require_two_free(w, "goedel_sentence");
  Formula presubst = mk_forall(2, mk_not(w));
  GodelNumber gn = encode(presubst, codec);
  Formula sentence =
      mk_forall(2, mk_not(substitute(w, 1, mk_numeral(gn.value()))));
  return DiagonalResult{w, presubst, gn, sentence};
}

DiagonalResult anand_fixedpoint(const Formula& w, Codec codec) {
  require_two_free(w, "anand_fixedpoint");
  Formula presubst = mk_not(w);
  GodelNumber gn = encode(presubst, codec);
  Formula sentence = mk_not(substitute(w, 1, mk_numeral(gn.value())));
  return DiagonalResult{w, presubst, gn, sentence};
}

bool self_reference_demo(const Formula& k, const ProofScript& proof,
                         const SystemProfile& p, Codec codec) {
  auto fv = free_vars(k);
  if (fv != std::set<VarIndex>{1})
    throw Error("self_reference_demo: formula must have free variable exactly x1");
  GodelNumber kn = encode(k, codec);
  GodelNumber pn = encode(proof, codec);

  bool via_q = q_check(kn, pn, p);

  Formula instance = substitute(k, 1, mk_numeral(kn.value()));
  Verdict v = proof.uses_hypotheses() ? Verdict::bad(0, "uses hypotheses")
                                      : check_proof(proof, p);
  bool direct = v.accepted && !proof.lines.empty() &&
                formula_equal(proof.lines.back().formula, instance);

  if (via_q != direct)
    throw Error("self-reference check disagreement: q_check says " +
                std::string(via_q ? "true" : "false") + ", direct check says " +
                std::string(direct ? "true" : "false"));
  return via_q;
}

}  // namespace pacheck
