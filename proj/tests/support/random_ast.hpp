// Seeded random generators for terms, formulas and proof scripts; the
// property tests and the codec round-trip corpus both draw from here.

#ifndef PACHECK_TESTS_RANDOM_AST_HPP
#define PACHECK_TESTS_RANDOM_AST_HPP

#include <random>

#include "pacheck/script.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck::testing {

class AstGen {
 public:
  explicit AstGen(std::uint64_t seed) : rng_(seed) {}

  Term term(int max_depth) {
    if (max_depth <= 0) return leaf();
    switch (pick(5)) {
      case 0:
      case 1: return leaf();
      case 2: return mk_succ(term(max_depth - 1));
      case 3: return mk_add(term(max_depth - 1), term(max_depth - 1));
      default: return mk_mul(term(max_depth - 1), term(max_depth - 1));
    }
  }

  Formula formula(int max_depth) {
    if (max_depth <= 0) return mk_eq(term(1), term(1));
    switch (pick(4)) {
      case 0: return mk_eq(term(max_depth - 1), term(max_depth - 1));
      case 1: return mk_not(formula(max_depth - 1));
      case 2: return mk_implies(formula(max_depth - 1), formula(max_depth - 1));
      default: return mk_forall(var_index(), formula(max_depth - 1));
    }
  }

  // Structurally valid script (indices increase, references point backwards);
  // not a correct derivation, which is all the codec cares about.
  ProofScript script(int lines, int depth) {
    ProofScript s;
    s.name = "random-" + std::to_string(pick(1000000));
    s.system = profile_names_sample();
    std::int64_t index = 0;
    for (int i = 0; i < lines; i++) {
      index += 1 + pick(3);
      Justification j;
      switch (i == 0 ? pick(2) : pick(6)) {
        case 0: j.kind = Justification::Kind::Hyp; break;
        case 1:
          j.kind = Justification::Kind::Axiom;
          j.tag = static_cast<AxiomTag>(pick(14));
          break;
        case 2:
          j.kind = Justification::Kind::MP;
          j.i = back_ref(s);
          j.j = back_ref(s);
          break;
        case 3:
          j.kind = Justification::Kind::Gen;
          j.i = back_ref(s);
          j.var = var_index();
          break;
        case 4:
          j.kind = Justification::Kind::OmegaNum;
          j.i = back_ref(s);
          j.n = pick(50);
          break;
        default:
          j.kind = Justification::Kind::IndOpen;
          j.i = back_ref(s);
          j.j = back_ref(s);
          break;
      }
      s.lines.push_back({index, formula(depth), j});
    }
    return s;
  }

  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }

 private:
  Term leaf() {
    return pick(2) ? Term(mk_var(var_index())) : Term(mk_numeral(pick(4)));
  }
  VarIndex var_index() { return static_cast<VarIndex>(1 + pick(4)); }
  std::int64_t back_ref(const ProofScript& s) {
    if (s.lines.empty()) return 1;
    return s.lines[pick(s.lines.size())].index;
  }
  std::string profile_names_sample() {
    const auto& names = profile_names();
    return names[pick(names.size())];
  }

  std::mt19937_64 rng_;
};

}  // namespace pacheck::testing

#endif
