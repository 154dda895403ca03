#include "doctest.h"
#include "pacheck/beta.hpp"
#include "pacheck/eval.hpp"

#include <random>

using namespace pacheck;

TEST_SUITE("beta") {

TEST_CASE("rm is remainder of y by x, total at x = 0") {
  CHECK(rm(3, 7) == 1);
  CHECK(rm(1, 9) == 0);
  CHECK(rm(0, 5) == 5);
}

TEST_CASE("beta is rm(1 + (i+1)v, u)") {
  CHECK(beta(8, 2, 0) == 2);
  CHECK(beta(8, 2, 1) == 3);
  for (int u = 0; u < 5; u++)
    for (int i = 0; i < 4; i++) CHECK(beta(u, 0, i) == 0);
}

TEST_CASE("beta agrees with direct modulus computation") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 10000; k++) {
    BigNat u = rng() % 1000000, v = rng() % 1000, i = rng() % 50;
    BigNat m = 1 + (i + 1) * v;
    CHECK(beta(u, v, i) == u % m);
  }
}

TEST_CASE("witness for [2,3] is (u=8, v=2) and lexicographically minimal") {
  BetaWitness w = encode_sequence({2, 3});
  CHECK(w.u == 8);
  CHECK(w.v == 2);
  CHECK(witness_valid(w));
  auto hits = brute_force_witnesses({2, 3}, 10, 200, 3);
  REQUIRE(!hits.empty());
  CHECK(hits[0].first == 2);   // v
  CHECK(hits[0].second == 8);  // u
}

TEST_CASE("empty sequence gets the (0, 0) witness") {
  BetaWitness w = encode_sequence({});
  CHECK(w.u == 0);
  CHECK(w.v == 0);
}

TEST_CASE("singleton [5] gets the smallest (v, u)") {
  BetaWitness w = encode_sequence({5});
  CHECK(beta(w.u, w.v, 0) == 5);
  auto hits = brute_force_witnesses({5}, 10, 200, 1);
  REQUIRE(!hits.empty());
  CHECK(w.v == hits[0].first);
  CHECK(w.u == hits[0].second);
}

TEST_CASE("witnesses match the brute-force minimum on short sequences") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; k++) {
    std::vector<BigNat> seq;
    int len = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; i++) seq.push_back(rng() % 6);
    BetaWitness w = encode_sequence(seq);
    CHECK(witness_valid(w));
    auto hits = brute_force_witnesses(seq, 40, 5000, 1);
    REQUIRE(!hits.empty());
    CHECK(w.v == hits[0].first);
    CHECK(w.u == hits[0].second);
  }
}

TEST_CASE("a sequence has more than one witness") {
  auto hits = brute_force_witnesses({2, 3}, 30, 3000, 2);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0] != hits[1]);
  for (const auto& [v, u] : hits) {
    CHECK(beta(u, v, 0) == 2);
    CHECK(beta(u, v, 1) == 3);
  }
}

TEST_CASE("omp batch search equals the serial reference") {
  std::mt19937_64 rng(77);
  std::vector<std::vector<BigNat>> batch;
  for (int k = 0; k < 60; k++) {
    std::vector<BigNat> seq;
    int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; i++) seq.push_back(rng() % 15);
    batch.push_back(seq);
  }
  auto par = encode_sequence_batch_omp(batch);
  for (std::size_t k = 0; k < batch.size(); k++) {
    BetaWitness ser = find_witness_serial(batch[k]);
    CHECK(par[k].u == ser.u);
    CHECK(par[k].v == ser.v);
  }
}

TEST_CASE("Bt formula has free variables x1..x4") {
  CHECK(free_vars(build_bt_formula()) == std::set<VarIndex>{1, 2, 3, 4});
}

TEST_CASE("Bt evaluates the beta relation in the standard model") {
  auto bt_at = [](int u, int v, int i, int k) {
    Formula f =
        bt_instance(mk_numeral(u), mk_numeral(v), mk_numeral(i), mk_numeral(k));
    return eval_formula(f, Model::Standard, {}, 8);
  };
  CHECK(bt_at(8, 2, 0, 2) == TruthValue::True);
  CHECK(bt_at(8, 2, 0, 1) == TruthValue::False);
}

TEST_CASE("Bt bridge: Bt(u,v,i,k) is true iff beta(u,v,i) = k") {
  for (int u = 0; u <= 50; u += 7) {
    for (int v = 0; v <= 50; v += 7) {
      for (int i = 0; i <= 3; i++) {
        for (int k = 0; k <= 10; k++) {
          Formula f = bt_instance(mk_numeral(u), mk_numeral(v), mk_numeral(i),
                                  mk_numeral(k));
          TruthValue t = eval_formula(f, Model::Standard, {}, 8);
          bool expect = beta(u, v, i) == k;
          CHECK(t == (expect ? TruthValue::True : TruthValue::False));
        }
      }
    }
  }
}

}
