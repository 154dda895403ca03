// Primitive-recursive functions: evaluation, rank, compilation to the
// arithmetic representation formula, witness-checked semantic verification,
// and the decidable metatheoretic predicates prf, prf' and q.

#ifndef PACHECK_PRIMREC_HPP
#define PACHECK_PRIMREC_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pacheck/codec.hpp"
#include "pacheck/eval.hpp"
#include "pacheck/kernel.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck {

struct PRFnNode;
using PRFn = std::shared_ptr<const PRFnNode>;

struct PRFnNode {
  enum class Kind { Zero, Succ, Proj, Comp, Rec };
  Kind kind;
  unsigned arity = 0;          // cached
  unsigned proj_index = 0;     // Proj
  PRFn f;                      // Comp: outer; Rec: g
  PRFn h;                      // Rec: h
  std::vector<PRFn> args;      // Comp: inner functions
};

PRFn pr_zero(unsigned arity);
PRFn pr_succ();
PRFn pr_proj(unsigned arity, unsigned index);  // 1-based index
// arity(f) must equal args.size(); all args share one arity.
PRFn pr_comp(PRFn f, std::vector<PRFn> args);
// f(x, 0) = g(x); f(x, y+1) = h(x, y, f(x, y)); arity(h) = arity(g) + 2.
PRFn pr_rec(PRFn g, PRFn h);

unsigned pr_arity(const PRFn& f);
BigNat eval_pr(const PRFn& f, const std::vector<BigNat>& args);

// Structural nesting depth: constructors rank 0, Comp/Rec one above their
// deepest component.
BigNat rank(const PRFn& f);

// The representation formula, free variables exactly x1..x_arity plus one
// result variable x_{ arity+1 }.  Rec emits the Bt-template; Comp chains one
// existential per inner result.
Formula compile_representation(const PRFn& f);

// Witness-checked evaluation of the compiled formula at a candidate result:
// every Rec template is entered at its encode_sequence witness pair, inner
// templates are reached through hinted existentials, so the verdict is
// definite at and around the true value.
TruthValue representation_holds(const PRFn& f, const std::vector<BigNat>& args,
                                const BigNat& result);

// True iff the compiled formula holds at the computed value and fails at
// every other candidate in the sweep window value+5 downward.
bool check_representation(const PRFn& f, const std::vector<BigNat>& args);

// -- metatheoretic predicates ---------------------------------------------------

// x decodes to a hypothesis-free proof script accepted under p whose last
// line's formula has Godel number y.
bool prf_check(const GodelNumber& x, const GodelNumber& y, const SystemProfile& p);

// u decodes to a formula with free x1; y decodes to an accepted
// hypothesis-free proof of that formula with x1 replaced by numeral(u).
bool prf_prime_check(const GodelNumber& u, const GodelNumber& y,
                     const SystemProfile& p);

// x decodes to a formula K with exactly one free variable; y decodes to an
// accepted hypothesis-free proof of K at numeral(x).
bool q_check(const GodelNumber& x, const GodelNumber& y, const SystemProfile& p);

// -- named definitions file ------------------------------------------------------

// Lines of `name = rec(proj(1,1), comp(succ, proj(3,3)))`; later definitions
// may reference earlier names.
std::map<std::string, PRFn> parse_pr_definitions(const std::string& text);
std::map<std::string, PRFn> load_pr_definitions(const std::string& path);

PRFn pr_add();  // rec(proj(1,1), comp(succ, proj(3,3)))
PRFn pr_mul();  // rec(zero(1), comp(add, proj(3,1), proj(3,3)))

}  // namespace pacheck

#endif
