#include "doctest.h"
#include "pacheck/beta.hpp"
#include "pacheck/primrec.hpp"
#include "support/derivations.hpp"

using namespace pacheck;
using pacheck::testing::make_reflexivity_proof;

namespace {
const char* kCorpusDir = PACHECK_CORPUS_DIR;
}

TEST_SUITE("primrec") {

TEST_CASE("evaluation of add and mul") {
  PRFn add = pr_add(), mul = pr_mul();
  CHECK(eval_pr(add, {2, 3}) == 5);
  CHECK(eval_pr(add, {0, 0}) == 0);
  CHECK(eval_pr(mul, {3, 4}) == 12);
  CHECK_THROWS_AS(eval_pr(add, {1}), Error);
}

TEST_CASE("rank counts nested Comp/Rec layers") {
  CHECK(rank(pr_succ()) == 0);
  CHECK(rank(pr_zero(2)) == 0);
  CHECK(rank(pr_proj(3, 1)) == 0);
  PRFn add = pr_add();
  CHECK(rank(add) == 2);
  // components of a recursion sit strictly below it
  CHECK(rank(add->f) < rank(add));
  CHECK(rank(add->h) < rank(add));
  PRFn mul = pr_mul();
  CHECK(rank(mul->f) < rank(mul));
  CHECK(rank(mul->h) < rank(mul));
}

TEST_CASE("base cases compile to single equations") {
  CHECK(print_formula(compile_representation(pr_succ())) == "(x2 = x1')");
  CHECK(print_formula(compile_representation(pr_proj(2, 1))) == "(x3 = x1)");
  CHECK(print_formula(compile_representation(pr_zero(2))) == "(x3 = 0)");
}

TEST_CASE("compiled add has the template shape") {
  Formula f = compile_representation(pr_add());
  CHECK(free_vars(f) == std::set<VarIndex>{1, 2, 3});
  // the recursion conjunct carries two Bt copies: count the modulus pattern
  std::string text = print_formula(f);
  std::size_t count = 0, pos = 0;
  const std::string modulus = "(0' + ((";
  while ((pos = text.find(modulus, pos)) != std::string::npos) {
    count++;
    pos += modulus.size();
  }
  // one in the base conjunct, one in the value conjunct, two in the step
  CHECK(count == 4);
}

TEST_CASE("witness-checked representation of add and mul") {
  PRFn add = pr_add(), mul = pr_mul();
  CHECK(check_representation(add, {2, 3}));
  CHECK(check_representation(add, {0, 0}));
  CHECK(check_representation(mul, {2, 2}));
  CHECK(representation_holds(mul, {2, 2}, 4) == TruthValue::True);
  CHECK(representation_holds(mul, {2, 2}, 5) == TruthValue::False);
}

TEST_CASE("uniqueness at numerals over the full desk range") {
  PRFn add = pr_add();
  for (int a = 0; a <= 3; a++) {
    for (int b = 0; b <= 3; b++) {
      BigNat value = eval_pr(add, {a, b});
      int hits = 0;
      for (BigNat z = 0; z <= value + 5; z += 1) {
        TruthValue t = representation_holds(add, {a, b}, z);
        CHECK(t != TruthValue::Unknown);
        if (t == TruthValue::True) hits++;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("prf accepts exactly accepted hypothesis-free proofs of y") {
  ProofScript s = load_script(std::string(kCorpusDir) + "/a5-one-liner.prf");
  GodelNumber x = encode(s, Codec::Positional);
  GodelNumber y = encode(parse_formula("((x1 + 0) = x1)"), Codec::Positional);
  CHECK(prf_check(x, y, system_profile("weak-GA")));
  CHECK_FALSE(prf_check(x, encode(parse_formula("(0 = 0)"), Codec::Positional),
                        system_profile("weak-GA")));
  // a gen-using proof fails under profiles without GEN
  ProofScript gen = load_script(std::string(kCorpusDir) + "/gen-a5.prf");
  GodelNumber gx = encode(gen, Codec::Positional);
  GodelNumber gy =
      encode(parse_formula("(A x1)((x1 + 0) = x1)"), Codec::Positional);
  CHECK(prf_check(gx, gy, system_profile("PA")));
  CHECK_FALSE(prf_check(gx, gy, system_profile("omega-PA")));
  // hypothesis-using scripts are not proofs
  ProofScript hyp = load_script(std::string(kCorpusDir) + "/hyp-conditional.prf");
  CHECK_FALSE(prf_check(encode(hyp, Codec::Positional),
                        encode(hyp.lines.back().formula, Codec::Positional),
                        system_profile("weak-GA")));
  // numbers that decode to nothing are simply false
  CHECK_FALSE(prf_check(gn_from_value(Codec::Positional, 12345),
                        gn_from_value(Codec::Positional, 1), system_profile("PA")));
}

TEST_CASE("prf' at the real Godel number of (x1 = x1)") {
  Formula k = parse_formula("(x1 = x1)");
  GodelNumber kn = encode(k, Codec::Positional);
  // K# is the bijective base-256 value of a 9-byte rendering
  CHECK(kn.value() == BigNat("765049586200249709098"));
  ProofScript proof = make_reflexivity_proof(mk_numeral(kn.value()), "refl-at-K");
  REQUIRE(check_proof(proof, system_profile("PA")).accepted);
  GodelNumber mn = encode(proof, Codec::Positional);
  CHECK(prf_prime_check(kn, mn, system_profile("PA")));
  // wrong instance: a proof of (0''' = 0''') is not a proof of F(K#)
  ProofScript small = make_reflexivity_proof(mk_numeral(3), "refl-at-3");
  CHECK_FALSE(prf_prime_check(kn, encode(small, Codec::Positional),
                              system_profile("PA")));
}

TEST_CASE("prf' requires x1 to occur") {
  GodelNumber no_x1 = encode(parse_formula("(x2 = x2)"), Codec::Positional);
  ProofScript proof = make_reflexivity_proof(mk_numeral(no_x1.value()), "p");
  CHECK_FALSE(prf_prime_check(no_x1, encode(proof, Codec::Positional),
                              system_profile("PA")));
}

TEST_CASE("q at the real K#, with mutation and arity guards") {
  Formula k = parse_formula("(x1 = x1)");
  GodelNumber kn = encode(k, Codec::Positional);
  ProofScript proof = make_reflexivity_proof(mk_numeral(kn.value()), "refl-at-K");
  GodelNumber mn = encode(proof, Codec::Positional);
  CHECK(q_check(kn, mn, system_profile("PA")));
  // mutate one line
  ProofScript bad = proof;
  bad.lines[4].formula = parse_formula("(0 = 0')");
  CHECK_FALSE(q_check(kn, encode(bad, Codec::Positional), system_profile("PA")));
  // two free variables fail the arity guard
  GodelNumber two = encode(parse_formula("(x1 = x2)"), Codec::Positional);
  CHECK_FALSE(q_check(two, mn, system_profile("PA")));
  // the proof uses GEN, so omega-profiles refuse it
  CHECK_FALSE(q_check(kn, mn, system_profile("omega-GA")));
}

TEST_CASE("definitions file builds the sample functions") {
  auto defs = parse_pr_definitions(
      "# sample library\n"
      "add = rec(proj(1,1), comp(succ, proj(3,3)))\n"
      "mul = rec(zero(1), comp(add, proj(3,1), proj(3,3)))\n");
  REQUIRE(defs.count("add"));
  REQUIRE(defs.count("mul"));
  CHECK(eval_pr(defs["add"], {2, 3}) == 5);
  CHECK(eval_pr(defs["mul"], {3, 4}) == 12);
  CHECK_THROWS_AS(parse_pr_definitions("f = rec(succ, succ)\n"), Error);
  CHECK_THROWS_AS(parse_pr_definitions("f = unknown(1)\n"), Error);
}

}
