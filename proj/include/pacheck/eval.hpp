// Bounded semantic evaluation in the standard model and in the CA ordinal
// model.
//
// Three-valued: quantifiers range over the first `bound` elements of the
// model's enumeration plus hinted witnesses, and a definite True/False is
// returned only when justified — a found witness or counterexample, a
// guard-bounded sweep, elimination of quantifier-free conjuncts, or a
// monotonicity argument that no witness can exist beyond the scanned range.
// Everything else is Unknown; a definite verdict never flips at larger bounds.

#ifndef PACHECK_EVAL_HPP
#define PACHECK_EVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "pacheck/ordinal.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck {

enum class Model { Standard, CA };
enum class TruthValue { True, False, Unknown };

std::string truth_name(TruthValue t);

struct UnboundVariable : Error {
  explicit UnboundVariable(VarIndex v)
      : Error("unbound free variable x" + std::to_string(v)) {}
};

struct EvalHints {
  std::map<VarIndex, std::vector<Ordinal>> per_var;
  std::vector<Ordinal> global;

  void add(VarIndex v, const Ordinal& o) {
    auto& list = per_var[v];
    for (const Ordinal& seen : list)
      if (seen == o) return;
    list.push_back(o);
  }
  void add_global(const Ordinal& o) {
    for (const Ordinal& seen : global)
      if (seen == o) return;
    global.push_back(o);
  }
};

using Bindings = std::map<VarIndex, Ordinal>;

Ordinal eval_term(const Term& t, Model model, const Bindings& bindings);

TruthValue eval_formula(const Formula& f, Model model, const Bindings& bindings,
                        unsigned bound, const EvalHints& hints = {});

// Enumeration the quantifier sweeps walk: Standard is 0..bound-1; CA is
// w*q + r for q <= bound, r < bound, in ordinal order.
std::vector<Ordinal> model_enumeration(Model model, unsigned bound);

struct CAAxiomReport {
  struct Entry {
    std::string axiom;
    std::size_t instances = 0;
    std::size_t passed = 0;
    bool all_true() const { return passed == instances; }
  };
  std::vector<Entry> axioms;
  TruthValue a9_at_omega = TruthValue::Unknown;
  std::string summary() const;
};

// Every closed instance of A(1)..A(9) over finite ordinals <= n_max in CA
// (existentials witness-hinted), plus A(9) at x1 := omega reported separately.
CAAxiomReport check_axioms_over_naturals(unsigned n_max);

}  // namespace pacheck

#endif
