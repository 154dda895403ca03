// Terms and formulas of the first-order arithmetic language.
//
// The core connective set is {=, ~, ->, A}; everything else (&, |, E, E1, <)
// is expanded at parse time.  Terms over {0, ', +, *, x_i}.
//
// Runs of successor marks are kept as a single Numeral node carrying an
// arbitrary-precision count, normalized so that Succ never wraps a numeral
// directly.  Structurally this is identical to Succ^n(0) — printing, parsing,
// substitution and equality all behave as if the successors were spelled out —
// but diagonal sentences whose numerals run to 10^20 successors stay O(1).

#ifndef PACHECK_SYNTAX_HPP
#define PACHECK_SYNTAX_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>

#include "pacheck/bignat.hpp"
#include "pacheck/rope.hpp"

namespace pacheck {

using VarIndex = int;  // variable indices are >= 1

struct TermNode;
struct FormulaNode;
using Term = std::shared_ptr<const TermNode>;
using Formula = std::shared_ptr<const FormulaNode>;

struct TermNode {
  enum class Kind { Numeral, Var, Succ, Add, Mul };
  Kind kind;
  BigNat num;    // Numeral
  VarIndex var;  // Var
  Term a, b;     // Succ: a; Add/Mul: a, b
};

struct FormulaNode {
  enum class Kind { Eq, Not, Implies, ForAll };
  Kind kind;
  Term l, r;     // Eq
  Formula f, g;  // Not: f; Implies: f, g; ForAll: f
  VarIndex var;  // ForAll
};

// -- constructors ------------------------------------------------------------

Term mk_zero();
Term mk_numeral(const BigNat& n);
Term mk_var(VarIndex i);
Term mk_succ(const Term& t);  // folds Succ(Numeral n) into Numeral n+1
Term mk_add(const Term& l, const Term& r);
Term mk_mul(const Term& l, const Term& r);

Formula mk_eq(const Term& l, const Term& r);
Formula mk_not(const Formula& f);
Formula mk_implies(const Formula& a, const Formula& b);
Formula mk_forall(VarIndex v, const Formula& body);

// Abbreviation builders (expand to core connectives immediately).
Formula mk_and(const Formula& a, const Formula& b);
Formula mk_or(const Formula& a, const Formula& b);
Formula mk_exists(VarIndex v, const Formula& body);
Formula mk_exists_unique(VarIndex v, const Formula& body);
Formula mk_less(const Term& l, const Term& r);  // (E w)((l + w') = r), w fresh in l, r

// -- structural operations ---------------------------------------------------

bool term_equal(const Term& a, const Term& b);
bool formula_equal(const Formula& a, const Formula& b);

std::optional<BigNat> as_numeral(const Term& t);
// Number of Succ constructors when the term is Succ^n(0); nullopt otherwise.
std::optional<BigNat> succ_count(const Term& t);

std::set<VarIndex> term_vars(const Term& t);
std::set<VarIndex> free_vars(const Formula& f);
std::set<VarIndex> all_vars(const Formula& f);  // free and bound
VarIndex least_fresh(const std::set<VarIndex>& used);

struct CaptureError : Error {
  explicit CaptureError(const std::string& msg) : Error(msg) {}
};

Term substitute_term(const Term& t, VarIndex v, const Term& repl);
// Replaces free occurrences of v; throws CaptureError when repl is not free
// for v in f.
Formula substitute(const Formula& f, VarIndex v, const Term& repl);
// Same, but alpha-renames capturing binders instead of throwing.  Renamed
// binders take the least index not occurring anywhere in f or repl.
Formula substitute_avoiding_capture(const Formula& f, VarIndex v, const Term& repl);
bool free_for(const Term& t, VarIndex v, const Formula& f);

// -- printing and parsing ----------------------------------------------------

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);
// Abbreviates numerals longer than `threshold` successors as "0'{n}" — output
// only, never accepted back by the parser.
std::string print_formula_abbrev(const Formula& f, const BigNat& threshold = 1000);

void render_term(const Term& t, Rope& out);
void render_formula(const Formula& f, Rope& out);
Rope render_formula(const Formula& f);

struct ParseError : Error {
  BigNat offset;
  ParseError(const std::string& msg, const BigNat& at)
      : Error(msg + " at offset " + to_decimal(at)), offset(at) {}
};

Formula parse_formula(const std::string& text);
Term parse_term(const std::string& text);
Formula parse_formula(const Rope& text);
Term parse_term(const Rope& text);

}  // namespace pacheck

#endif
