#include "doctest.h"
#include "pacheck/diagonal.hpp"
#include "support/derivations.hpp"

using namespace pacheck;
using pacheck::testing::make_reflexivity_proof;

TEST_SUITE("diagonal") {

TEST_CASE("goedel sentence: closed, fixed point decodes to the presubstitution") {
  Formula w = parse_formula("(x1 = x2)");
  DiagonalResult r = goedel_sentence(w);
  // presubstitution is (A x2)~(x1 = x2)
  CHECK(print_formula(r.presubst) == "(A x2)~(x1 = x2)");
  CHECK(r.fixed_gn.value() ==
        encode(parse_formula("(A x2)~(x1 = x2)"), Codec::Positional).value());
  // the sentence substitutes the numeral of that number for x1
  REQUIRE(r.sentence->kind == FormulaNode::Kind::ForAll);
  Formula expected = mk_forall(
      2, mk_not(mk_eq(mk_numeral(r.fixed_gn.value()), mk_var(2))));
  CHECK(formula_equal(r.sentence, expected));
  CHECK(free_vars(r.sentence).empty());
  // fixed point: decode(fixed_gn) is the presubstitution formula
  CHECK(formula_equal(std::get<Formula>(decode(r.fixed_gn)), r.presubst));
}

TEST_CASE("goedel sentence is deterministic") {
  Formula w = parse_formula("(x1 = x2)");
  DiagonalResult a = goedel_sentence(w);
  DiagonalResult b = goedel_sentence(w);
  CHECK(a.fixed_gn == b.fixed_gn);
  CHECK(formula_equal(a.sentence, b.sentence));
}

TEST_CASE("open fixed point keeps x2 free and differs from the closed one") {
  Formula w = parse_formula("(x1 = x2)");
  DiagonalResult r = anand_fixedpoint(w);
  CHECK(print_formula(r.presubst) == "~(x1 = x2)");
  CHECK(free_vars(r.sentence) == std::set<VarIndex>{2});
  CHECK(formula_equal(std::get<Formula>(decode(r.fixed_gn)), r.presubst));
  DiagonalResult g = goedel_sentence(w);
  CHECK_FALSE(r.fixed_gn == g.fixed_gn);
  // substituting a numeral for x2 closes it
  CHECK(free_vars(substitute(r.sentence, 2, mk_numeral(7))).empty());
}

TEST_CASE("wrong free-variable sets are rejected") {
  CHECK_THROWS_AS(goedel_sentence(parse_formula("(x1 = x1)")), Error);
  CHECK_THROWS_AS(anand_fixedpoint(parse_formula("(x1 = x3)")), Error);
  CHECK_THROWS_AS(
      self_reference_demo(parse_formula("(0 = 0)"),
                          make_reflexivity_proof(mk_numeral(3), "p"),
                          system_profile("PA")),
      Error);
}

TEST_CASE("self-reference demo agrees with q on true and false cases") {
  Formula k = parse_formula("(x1 = x1)");
  GodelNumber kn = encode(k, Codec::Positional);
  ProofScript good = make_reflexivity_proof(mk_numeral(kn.value()), "good");
  CHECK(self_reference_demo(k, good, system_profile("PA")));
  // a proof of the wrong instance is false on both routes
  ProofScript wrong = make_reflexivity_proof(mk_numeral(3), "wrong");
  CHECK_FALSE(self_reference_demo(k, wrong, system_profile("PA")));
}

TEST_CASE("both routes of the self-reference check agree on a mixed corpus") {
  std::vector<Formula> ks = {
      parse_formula("(x1 = x1)"),
      parse_formula("((x1 + 0) = x1)"),
      parse_formula("((0 + x1) = (0 + x1))"),
  };
  int pairs = 0, trues = 0;
  for (const Formula& k : ks) {
    GodelNumber kn = encode(k, Codec::Positional);
    BigNat kv = kn.value();
    std::vector<ProofScript> candidates;
    // (N = N): the right instance for (x1 = x1)
    candidates.push_back(make_reflexivity_proof(mk_numeral(kv), "n"));
    // ((N + 0) = N): lines 1..4 of the same derivation, right for A5's shape
    ProofScript prefix = candidates[0];
    prefix.lines.resize(4);
    candidates.push_back(prefix);
    // ((0 + N) = (0 + N)): right for the third formula
    candidates.push_back(make_reflexivity_proof(mk_add(mk_zero(), mk_numeral(kv)), "t"));
    // wrong instance entirely
    candidates.push_back(make_reflexivity_proof(mk_numeral(3), "small"));
    // mutations
    for (int m = 0; m < 2; m++) {
      ProofScript bad = candidates[0];
      bad.lines[static_cast<std::size_t>(2 + 3 * m)].formula =
          parse_formula("(0 = 0')");
      candidates.push_back(bad);
    }
    // truncated proof
    ProofScript cut = candidates[0];
    cut.lines.pop_back();
    candidates.push_back(cut);
    for (const ProofScript& proof : candidates) {
      // self_reference_demo throws if its two routes disagree
      bool verdict = false;
      CHECK_NOTHROW(verdict = self_reference_demo(k, proof, system_profile("PA")));
      if (verdict) trues++;
      pairs++;
    }
  }
  CHECK(pairs >= 20);
  CHECK(trues == 3);  // exactly one matching proof per formula
}

}
