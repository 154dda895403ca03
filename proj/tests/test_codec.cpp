#include <map>

#include "doctest.h"
#include "pacheck/codec.hpp"
#include "support/random_ast.hpp"

using namespace pacheck;

namespace {

// independent bijective base-256 evaluation, the oracle for positional values
BigNat bijective256(const std::string& s) {
  BigNat v = 0;
  for (unsigned char c : s) v = v * 256 + (c + 1);
  return v;
}

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("prime-power of a two-symbol sequence") {
  // codes (1, 3) are the rendering "0'": 2^1 * 3^3 = 54
  GodelNumber g = encode(parse_term("0'"), Codec::PrimePower);
  CHECK(g.value() == 54);
  Encodable back = decode(gn_from_value(Codec::PrimePower, 54));
  CHECK(term_equal(std::get<Term>(back), parse_term("0'")));
}

TEST_CASE("positional value equals the bijective base-256 of the rendering") {
  for (const char* text : {"(0 = 0)", "((x1 + 0) = x1)", "~(0 = 0')"}) {
    Formula f = parse_formula(text);
    CHECK(encode(f, Codec::Positional).value() == bijective256(print_formula(f)));
  }
}

TEST_CASE("decode of 0 and of non-encodings") {
  CHECK_THROWS_AS(decode(gn_from_value(Codec::Positional, 0)), NotAnEncoding);
  // 10 = 2 * 5 skips the prime 3
  CHECK_THROWS_AS(gn_from_value(Codec::PrimePower, 10), NotAnEncoding);
  // positional value of "abc" decodes to no object
  CHECK_THROWS_AS(decode(gn_from_value(Codec::Positional, bijective256("abc"))),
                  NotAnEncoding);
}

TEST_CASE("gn_compare orders by value and rejects codec mixing") {
  GodelNumber a = encode(parse_term("0"), Codec::Positional);
  GodelNumber b = encode(parse_term("0''"), Codec::Positional);
  CHECK(gn_compare(a, b) < 0);  // shorter rendering
  CHECK(gn_compare(a, a) == 0);
  GodelNumber c = encode(parse_term("0"), Codec::PrimePower);
  CHECK_THROWS_AS(gn_compare(a, c), CodecError);
}

TEST_CASE("numeral encodings are strictly increasing") {
  for (Codec codec : {Codec::Positional, Codec::PrimePower}) {
    for (int n = 0; n < 50; n++) {
      GodelNumber lo = encode(mk_numeral(n), codec);
      GodelNumber hi = encode(mk_numeral(n + 1), codec);
      CHECK(gn_compare(lo, hi) < 0);
    }
  }
}

TEST_CASE("positional order is strictly monotone in rendering length") {
  pacheck::testing::AstGen gen(99);
  for (int i = 0; i < 200; i++) {
    Formula f = gen.formula(5);
    Formula g = gen.formula(5);
    Rope rf = render_formula(f), rg = render_formula(g);
    if (rf.size() == rg.size()) continue;
    int cmp = gn_compare(encode(f, Codec::Positional), encode(g, Codec::Positional));
    CHECK((rf.size() < rg.size()) == (cmp < 0));
  }
}

TEST_CASE("round-trip and injectivity on random formulas, both codecs") {
  pacheck::testing::AstGen gen(1234);
  for (Codec codec : {Codec::Positional, Codec::PrimePower}) {
    std::map<std::string, std::string> seen;  // rendering-keyed collision check
    for (int i = 0; i < 500; i++) {
      Formula f = gen.formula(6);
      GodelNumber g = encode(f, codec);
      Encodable back = decode(g);
      REQUIRE(std::holds_alternative<Formula>(back));
      CHECK(formula_equal(std::get<Formula>(back), f));
    }
  }
}

TEST_CASE("no collisions across distinct formulas") {
  pacheck::testing::AstGen gen(555);
  std::vector<Formula> fs;
  for (int i = 0; i < 300; i++) fs.push_back(gen.formula(5));
  for (std::size_t i = 0; i < fs.size(); i++) {
    for (std::size_t j = i + 1; j < fs.size(); j++) {
      if (formula_equal(fs[i], fs[j])) continue;
      CHECK_FALSE(encode(fs[i], Codec::Positional) == encode(fs[j], Codec::Positional));
      CHECK_FALSE(encode(fs[i], Codec::PrimePower) == encode(fs[j], Codec::PrimePower));
    }
  }
}

TEST_CASE("proof scripts round-trip under both codecs") {
  pacheck::testing::AstGen gen(8080);
  for (Codec codec : {Codec::Positional, Codec::PrimePower}) {
    for (int i = 0; i < 50; i++) {
      ProofScript s = gen.script(1 + static_cast<int>(gen.pick(8)), 4);
      Encodable back = decode(encode(s, codec));
      REQUIRE(std::holds_alternative<ProofScript>(back));
      CHECK(script_equal(std::get<ProofScript>(back), s));
    }
  }
}

TEST_CASE("huge renderings encode lazily and compare by length") {
  Term huge = mk_numeral(BigNat("100000000000000000000"));
  GodelNumber g = encode(mk_eq(huge, huge), Codec::Positional);
  CHECK_FALSE(g.value_fits());
  CHECK_THROWS_AS(g.value(), ValueTooLarge);
  GodelNumber small = encode(parse_formula("(0 = 0)"), Codec::Positional);
  CHECK(gn_compare(small, g) < 0);
  // and still round-trips structurally
  Encodable back = decode(g);
  CHECK(formula_equal(std::get<Formula>(back), mk_eq(huge, huge)));
}

}
