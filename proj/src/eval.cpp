#include "pacheck/eval.hpp"

#include <optional>

#include "pacheck/kernel.hpp"

namespace pacheck {

std::string truth_name(TruthValue t) {
  switch (t) {
    case TruthValue::True: return "True";
    case TruthValue::False: return "False";
    case TruthValue::Unknown: return "Unknown";
  }
  return "?";
}

Ordinal eval_term(const Term& t, Model model, const Bindings& bindings) {
  switch (t->kind) {
    case TermNode::Kind::Numeral: return Ordinal(t->num);
    case TermNode::Kind::Var: {
      auto it = bindings.find(t->var);
      if (it == bindings.end()) throw UnboundVariable(t->var);
      return it->second;
    }
    case TermNode::Kind::Succ: return ord_succ(eval_term(t->a, model, bindings));
    case TermNode::Kind::Add:
      return ord_add(eval_term(t->a, model, bindings), eval_term(t->b, model, bindings));
    case TermNode::Kind::Mul:
      return ord_mul(eval_term(t->a, model, bindings), eval_term(t->b, model, bindings));
  }
  throw Error("bad term");
}

std::vector<Ordinal> model_enumeration(Model model, unsigned bound) {
  std::vector<Ordinal> out;
  if (model == Model::Standard) {
    for (unsigned r = 0; r < bound; r++) out.push_back(Ordinal(r));
    return out;
  }
  for (unsigned q = 0; q <= bound; q++) {
    for (unsigned r = 0; r < bound; r++) {
      std::vector<Ordinal::Part> parts;
      if (q > 0) parts.push_back({1, q});
      if (r > 0) parts.push_back({0, r});
      out.push_back(Ordinal::from_parts(std::move(parts)));
    }
  }
  return out;
}

namespace {

bool term_contains(const Term& t, VarIndex v) { return term_vars(t).count(v) > 0; }

// ~(A w)~psi, i.e. (E w)psi
bool as_exists(const Formula& f, VarIndex& v, Formula& body) {
  if (f->kind != FormulaNode::Kind::Not) return false;
  const Formula& g = f->f;
  if (g->kind != FormulaNode::Kind::ForAll) return false;
  if (g->f->kind != FormulaNode::Kind::Not) return false;
  v = g->var;
  body = g->f->f;
  return true;
}

// ~(a -> ~b), i.e. (a & b)
bool as_and(const Formula& f, Formula& a, Formula& b) {
  if (f->kind != FormulaNode::Kind::Not) return false;
  const Formula& g = f->f;
  if (g->kind != FormulaNode::Kind::Implies) return false;
  if (g->g->kind != FormulaNode::Kind::Not) return false;
  a = g->f;
  b = g->g->f;
  return true;
}

// (E w)((l + w') = r) with w not in l, r — the expansion of (l < r)
bool as_less(const Formula& f, Term& l, Term& r) {
  VarIndex w;
  Formula body;
  if (!as_exists(f, w, body)) return false;
  if (body->kind != FormulaNode::Kind::Eq) return false;
  const Term& lhs = body->l;
  if (lhs->kind != TermNode::Kind::Add) return false;
  const Term& inc = lhs->b;
  if (inc->kind != TermNode::Kind::Succ || inc->a->kind != TermNode::Kind::Var ||
      inc->a->var != w)
    return false;
  if (term_contains(lhs->a, w) || term_contains(body->r, w)) return false;
  l = lhs->a;
  r = body->r;
  return true;
}

struct EvalCtx {
  Model model;
  unsigned bound;
  const EvalHints* hints;
  Bindings binds;
  std::vector<Ordinal> domain;

  std::vector<Ordinal> candidates(VarIndex v) const {
    std::vector<Ordinal> out;
    if (hints) {
      auto it = hints->per_var.find(v);
      if (it != hints->per_var.end())
        out.insert(out.end(), it->second.begin(), it->second.end());
      out.insert(out.end(), hints->global.begin(), hints->global.end());
    }
    out.insert(out.end(), domain.begin(), domain.end());
    return out;
  }
};

class Binder {
 public:
  Binder(EvalCtx& ctx, VarIndex v, const Ordinal& o) : ctx_(ctx), v_(v) {
    auto it = ctx.binds.find(v);
    if (it != ctx.binds.end()) {
      saved_ = it->second;
      had_ = true;
    }
    ctx.binds[v] = o;
  }
  ~Binder() {
    if (had_)
      ctx_.binds[v_] = saved_;
    else
      ctx_.binds.erase(v_);
  }

 private:
  EvalCtx& ctx_;
  VarIndex v_;
  Ordinal saved_;
  bool had_ = false;
};

// Conservative strict-increase test, valid for both the natural-number and
// the ordinal interpretation of the operations.
bool strictly_increasing(const Term& t, VarIndex v, EvalCtx& ctx);

Ordinal min_value(const Term& t, VarIndex v, EvalCtx& ctx) {
  Binder b(ctx, v, Ordinal(0));
  return eval_term(t, ctx.model, ctx.binds);
}

bool strictly_increasing(const Term& t, VarIndex v, EvalCtx& ctx) {
  switch (t->kind) {
    case TermNode::Kind::Numeral: return false;
    case TermNode::Kind::Var: return t->var == v;
    case TermNode::Kind::Succ: return strictly_increasing(t->a, v, ctx);
    case TermNode::Kind::Add:
      if (strictly_increasing(t->b, v, ctx)) return true;
      return ctx.model == Model::Standard && strictly_increasing(t->a, v, ctx);
    case TermNode::Kind::Mul: {
      if (strictly_increasing(t->b, v, ctx) && Ordinal(1) <= min_value(t->a, v, ctx))
        return true;
      return ctx.model == Model::Standard && strictly_increasing(t->a, v, ctx) &&
             Ordinal(1) <= min_value(t->b, v, ctx);
    }
  }
  return false;
}

// -- equation solving --------------------------------------------------------

enum class SolveOutcome { Solution, NoSolution, CantTell };

struct SolveResult {
  SolveOutcome outcome;
  Ordinal witness;
};

// Standard model: side strictly increasing in v, target constant.  A strictly
// increasing function on naturals grows at least by one per step, so the
// witness is at most target; gallop then bisect.
SolveResult solve_standard(const Term& side, VarIndex v, const BigNat& target,
                           EvalCtx& ctx) {
  auto f = [&](const BigNat& x) {
    Binder b(ctx, v, Ordinal(x));
    return eval_term(side, ctx.model, ctx.binds).finite_value();
  };
  BigNat f0 = f(0);
  if (f0 == target) return {SolveOutcome::Solution, Ordinal(BigNat(0))};
  if (f0 > target) return {SolveOutcome::NoSolution, {}};
  BigNat lo = 0, hi = 1;
  while (f(hi) < target) {
    lo = hi;
    hi <<= 1;
  }
  while (lo + 1 < hi) {
    BigNat mid = (lo + hi) / 2;
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  if (f(hi) == target) return {SolveOutcome::Solution, Ordinal(hi)};
  return {SolveOutcome::NoSolution, {}};
}

// Unique x with a + x = b, when a <= b.
std::optional<Ordinal> ord_left_subtract(const Ordinal& a, const Ordinal& b) {
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::size_t i = 0;
  while (i < pa.size() && i < pb.size() && pa[i] == pb[i]) i++;
  if (i == pa.size()) {
    std::vector<Ordinal::Part> rest(pb.begin() + i, pb.end());
    return Ordinal::from_parts(std::move(rest));
  }
  if (i == pb.size()) return std::nullopt;  // a > b
  if (pa[i].exponent > pb[i].exponent) return std::nullopt;
  if (pa[i].exponent == pb[i].exponent && pa[i].coefficient > pb[i].coefficient)
    return std::nullopt;
  std::vector<Ordinal::Part> rest(pb.begin() + i, pb.end());
  if (pa[i].exponent == pb[i].exponent) rest[0].coefficient -= pa[i].coefficient;
  return Ordinal::from_parts(std::move(rest));
}

std::optional<Ordinal> ord_pred(const Ordinal& o) {
  if (o.is_zero()) return std::nullopt;
  auto parts = o.parts();
  if (parts.back().exponent != 0) return std::nullopt;  // limit ordinal
  parts.back().coefficient -= 1;
  if (parts.back().coefficient == 0) parts.pop_back();
  return Ordinal::from_parts(std::move(parts));
}

// CA model: peel the term along the single v-path where the algebra admits
// unique inversion (successor, and addition in its right argument).
SolveResult solve_ca(const Term& side, VarIndex v, const Ordinal& target,
                     EvalCtx& ctx) {
  switch (side->kind) {
    case TermNode::Kind::Var:
      if (side->var == v) return {SolveOutcome::Solution, target};
      return {SolveOutcome::CantTell, {}};
    case TermNode::Kind::Succ: {
      auto p = ord_pred(target);
      if (!p) return {SolveOutcome::NoSolution, {}};
      return solve_ca(side->a, v, *p, ctx);
    }
    case TermNode::Kind::Add: {
      bool in_l = term_contains(side->a, v);
      bool in_r = term_contains(side->b, v);
      if (in_r && !in_l) {
        Ordinal base = eval_term(side->a, ctx.model, ctx.binds);
        auto rest = ord_left_subtract(base, target);
        if (!rest) return {SolveOutcome::NoSolution, {}};
        return solve_ca(side->b, v, *rest, ctx);
      }
      return {SolveOutcome::CantTell, {}};
    }
    default: return {SolveOutcome::CantTell, {}};
  }
}

// -- formula evaluation --------------------------------------------------------

TruthValue eval_f(const Formula& f, EvalCtx& ctx);

TruthValue invert(TruthValue t) {
  if (t == TruthValue::True) return TruthValue::False;
  if (t == TruthValue::False) return TruthValue::True;
  return TruthValue::Unknown;
}

TruthValue eval_exists(VarIndex v, const Formula& body, EvalCtx& ctx) {
  // strip conjuncts that do not mention v
  Formula a, b;
  if (as_and(body, a, b)) {
    if (!free_vars(a).count(v)) {
      TruthValue ta = eval_f(a, ctx);
      if (ta == TruthValue::False) return TruthValue::False;
      if (ta == TruthValue::True) return eval_exists(v, b, ctx);
    } else if (!free_vars(b).count(v)) {
      TruthValue tb = eval_f(b, ctx);
      if (tb == TruthValue::False) return TruthValue::False;
      if (tb == TruthValue::True) return eval_exists(v, a, ctx);
    }
  }

  if (body->kind == FormulaNode::Kind::Eq) {
    if (term_equal(body->l, body->r)) return TruthValue::True;
    bool in_l = term_contains(body->l, v);
    bool in_r = term_contains(body->r, v);
    if (in_l != in_r) {
      const Term& side = in_l ? body->l : body->r;
      const Term& other = in_l ? body->r : body->l;
      if (strictly_increasing(side, v, ctx)) {
        Ordinal target = eval_term(other, ctx.model, ctx.binds);
        SolveResult res{SolveOutcome::CantTell, {}};
        if (ctx.model == Model::Standard) {
          res = solve_standard(side, v, target.finite_value(), ctx);
        } else {
          res = solve_ca(side, v, target, ctx);
        }
        if (res.outcome == SolveOutcome::NoSolution) return TruthValue::False;
        if (res.outcome == SolveOutcome::Solution) {
          Binder bind(ctx, v, res.witness);
          if (eval_f(body, ctx) == TruthValue::True) return TruthValue::True;
          return TruthValue::False;  // the unique candidate fails
        }
      }
    }
  }

  // witness sweep
  bool saw_unknown = false;
  for (const Ordinal& cand : ctx.candidates(v)) {
    Binder bind(ctx, v, cand);
    TruthValue t = eval_f(body, ctx);
    if (t == TruthValue::True) return TruthValue::True;
    if (t == TruthValue::Unknown) saw_unknown = true;
  }
  (void)saw_unknown;
  return TruthValue::Unknown;
}

TruthValue eval_forall(VarIndex v, const Formula& body, EvalCtx& ctx) {
  // guarded form (A v)((v < s) -> psi) with s a closed finite value: the
  // guard bounds the sweep, so the quantifier is decidable.
  if (body->kind == FormulaNode::Kind::Implies) {
    Term gl, gr;
    if (as_less(body->f, gl, gr) && gl->kind == TermNode::Kind::Var && gl->var == v &&
        !term_contains(gr, v)) {
      std::optional<Ordinal> limit;
      try {
        limit = eval_term(gr, ctx.model, ctx.binds);
      } catch (const UnboundVariable&) {
        limit = std::nullopt;
      }
      if (limit && limit->is_finite()) {
        BigNat n = limit->finite_value();
        bool unknown = false;
        for (BigNat r = 0; r < n; r += 1) {
          Binder bind(ctx, v, Ordinal(r));
          TruthValue t = eval_f(body->g, ctx);
          if (t == TruthValue::False) return TruthValue::False;
          if (t == TruthValue::Unknown) unknown = true;
        }
        return unknown ? TruthValue::Unknown : TruthValue::True;
      }
    }
  }

  // single (dis)equation with a strictly increasing side: at most one
  // counterexample/solution exists, and the solver finds it exactly.
  const Formula* eq = nullptr;
  bool negated = false;
  if (body->kind == FormulaNode::Kind::Eq) {
    eq = &body;
  } else if (body->kind == FormulaNode::Kind::Not &&
             body->f->kind == FormulaNode::Kind::Eq) {
    eq = &body->f;
    negated = true;
  }
  if (eq) {
    const Formula& e = *eq;
    if (term_equal(e->l, e->r)) return negated ? TruthValue::False : TruthValue::True;
    bool in_l = term_contains(e->l, v);
    bool in_r = term_contains(e->r, v);
    if (in_l != in_r) {
      const Term& side = in_l ? e->l : e->r;
      const Term& other = in_l ? e->r : e->l;
      if (strictly_increasing(side, v, ctx)) {
        Ordinal target = eval_term(other, ctx.model, ctx.binds);
        SolveResult res{SolveOutcome::CantTell, {}};
        if (ctx.model == Model::Standard)
          res = solve_standard(side, v, target.finite_value(), ctx);
        else
          res = solve_ca(side, v, target, ctx);
        if (res.outcome != SolveOutcome::CantTell) {
          bool has_solution = res.outcome == SolveOutcome::Solution;
          if (!negated) {
            // equation cannot hold at every point of an infinite domain
            return TruthValue::False;
          }
          return has_solution ? TruthValue::False : TruthValue::True;
        }
      }
    }
  }

  // counterexample sweep
  bool unknown = false;
  for (const Ordinal& cand : ctx.candidates(v)) {
    Binder bind(ctx, v, cand);
    TruthValue t = eval_f(body, ctx);
    if (t == TruthValue::False) return TruthValue::False;
    if (t == TruthValue::Unknown) unknown = true;
  }
  (void)unknown;
  return TruthValue::Unknown;
}

TruthValue eval_f(const Formula& f, EvalCtx& ctx) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq: {
      Ordinal l = eval_term(f->l, ctx.model, ctx.binds);
      Ordinal r = eval_term(f->r, ctx.model, ctx.binds);
      return l == r ? TruthValue::True : TruthValue::False;
    }
    case FormulaNode::Kind::Not: {
      VarIndex v;
      Formula body;
      if (as_exists(f, v, body)) return eval_exists(v, body, ctx);
      return invert(eval_f(f->f, ctx));
    }
    case FormulaNode::Kind::Implies: {
      TruthValue a = eval_f(f->f, ctx);
      if (a == TruthValue::False) return TruthValue::True;
      TruthValue b = eval_f(f->g, ctx);
      if (a == TruthValue::True) return b;
      return b == TruthValue::True ? TruthValue::True : TruthValue::Unknown;
    }
    case FormulaNode::Kind::ForAll: return eval_forall(f->var, f->f, ctx);
  }
  return TruthValue::Unknown;
}

}  // namespace

TruthValue eval_formula(const Formula& f, Model model, const Bindings& bindings,
                        unsigned bound, const EvalHints& hints) {
  for (VarIndex v : free_vars(f))
    if (!bindings.count(v)) throw UnboundVariable(v);
  if (model == Model::Standard) {
    for (const auto& [v, o] : bindings)
      if (!o.is_finite())
        throw Error("standard model bindings must be finite (x" + std::to_string(v) + ")");
  }
  EvalCtx ctx{model, bound, &hints, bindings, model_enumeration(model, bound)};
  return eval_f(f, ctx);
}

CAAxiomReport check_axioms_over_naturals(unsigned n_max) {
  CAAxiomReport report;
  const AxiomTag tags[] = {AxiomTag::A1, AxiomTag::A2, AxiomTag::A3,
                           AxiomTag::A4, AxiomTag::A5, AxiomTag::A6,
                           AxiomTag::A7, AxiomTag::A8, AxiomTag::A9};
  for (AxiomTag tag : tags) {
    const Formula& ax = axiom_formula(tag);
    std::vector<VarIndex> vars(free_vars(ax).begin(), free_vars(ax).end());
    CAAxiomReport::Entry entry;
    entry.axiom = axiom_tag_name(tag);
    std::vector<unsigned> tuple(vars.size(), 0);
    for (;;) {
      Bindings binds;
      EvalHints hints;
      for (std::size_t k = 0; k < vars.size(); k++) {
        binds[vars[k]] = Ordinal(tuple[k]);
        if (tuple[k] > 0) hints.add_global(Ordinal(tuple[k] - 1));
      }
      entry.instances++;
      if (eval_formula(ax, Model::CA, binds, n_max + 2, hints) == TruthValue::True)
        entry.passed++;
      // next tuple
      std::size_t k = 0;
      while (k < tuple.size()) {
        if (tuple[k] < n_max) {
          tuple[k]++;
          break;
        }
        tuple[k] = 0;
        k++;
      }
      if (k == tuple.size()) break;
    }
    report.axioms.push_back(entry);
  }
  {
    Bindings binds;
    binds[1] = Ordinal::omega();
    report.a9_at_omega =
        eval_formula(axiom_formula(AxiomTag::A9), Model::CA, binds, n_max + 2);
  }
  return report;
}

std::string CAAxiomReport::summary() const {
  std::string out;
  for (const auto& e : axioms) {
    out += e.axiom + ": " + (e.all_true() ? "pass" : "FAIL") + " (" +
           std::to_string(e.passed) + "/" + std::to_string(e.instances) + ")\n";
  }
  out += "A9 at x1 := omega: " + truth_name(a9_at_omega) + "\n";
  return out;
}

}  // namespace pacheck
