#include "pacheck/kernel.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pacheck {

// -- fixed axioms -------------------------------------------------------------

const Formula& axiom_formula(AxiomTag tag) {
  static const std::map<AxiomTag, Formula> table = [] {
    std::map<AxiomTag, Formula> t;
    t[AxiomTag::A1] = parse_formula("((x1 = x2) -> ((x1 = x3) -> (x2 = x3)))");
    t[AxiomTag::A2] = parse_formula("((x1 = x2) -> (x1' = x2'))");
    t[AxiomTag::A3] = parse_formula("~(0 = x1')");
    t[AxiomTag::A4] = parse_formula("((x1' = x2') -> (x1 = x2))");
    t[AxiomTag::A5] = parse_formula("((x1 + 0) = x1)");
    t[AxiomTag::A6] = parse_formula("((x1 + x2') = (x1 + x2)')");
    t[AxiomTag::A7] = parse_formula("((x1 * 0) = 0)");
    t[AxiomTag::A8] = parse_formula("((x1 * x2') = ((x1 * x2) + x1))");
    t[AxiomTag::A9] = parse_formula("(~(x1 = 0) -> (E x2)(x1 = x2'))");
    return t;
  }();
  auto it = table.find(tag);
  if (it == table.end())
    throw Error("axiom " + axiom_tag_name(tag) + " is a schema, not a fixed formula");
  return it->second;
}

// -- schema matching -----------------------------------------------------------

namespace {

bool is_implies(const Formula& f) { return f->kind == FormulaNode::Kind::Implies; }
bool is_not(const Formula& f) { return f->kind == FormulaNode::Kind::Not; }

// A => (B => A)
bool match_k1(const Formula& f) {
  if (!is_implies(f) || !is_implies(f->g)) return false;
  return formula_equal(f->f, f->g->g);
}

// (A => (B => C)) => ((A => B) => (A => C))
bool match_k2(const Formula& f) {
  if (!is_implies(f)) return false;
  const Formula& p = f->f;
  const Formula& q = f->g;
  if (!is_implies(p) || !is_implies(p->g)) return false;
  if (!is_implies(q) || !is_implies(q->f) || !is_implies(q->g)) return false;
  const Formula &a = p->f, &b = p->g->f, &c = p->g->g;
  return formula_equal(q->f->f, a) && formula_equal(q->f->g, b) &&
         formula_equal(q->g->f, a) && formula_equal(q->g->g, c);
}

// (~B => ~A) => ((~B => A) => B)
bool match_k3(const Formula& f) {
  if (!is_implies(f)) return false;
  const Formula& p = f->f;
  const Formula& q = f->g;
  if (!is_implies(p) || !is_not(p->f) || !is_not(p->g)) return false;
  if (!is_implies(q) || !is_implies(q->f) || !is_not(q->f->f)) return false;
  const Formula &b = p->f->f, &a = p->g->f;
  return formula_equal(q->f->f->f, b) && formula_equal(q->f->g, a) &&
         formula_equal(q->g, b);
}

// Anti-unification for K4: walk body and instance in parallel; wherever the
// body has a free occurrence of x_i the instance shows the substituted term,
// and everywhere else the two must agree.  Bound regions for x_i must match
// verbatim.
bool k4_collect(const Formula& body, const Formula& inst, VarIndex v, bool shadowed,
                std::optional<Term>& subst);

bool k4_collect_term(const Term& body, const Term& inst, VarIndex v, bool shadowed,
                     std::optional<Term>& subst) {
  if (!shadowed && body->kind == TermNode::Kind::Var && body->var == v) {
    if (subst) return term_equal(*subst, inst);
    subst = inst;
    return true;
  }
  switch (body->kind) {
    case TermNode::Kind::Numeral:
      return inst->kind == TermNode::Kind::Numeral && body->num == inst->num;
    case TermNode::Kind::Var:
      return inst->kind == TermNode::Kind::Var && body->var == inst->var;
    case TermNode::Kind::Succ:
      // a compact numeral on the instance side still matches Succ(...)
      if (inst->kind == TermNode::Kind::Succ)
        return k4_collect_term(body->a, inst->a, v, shadowed, subst);
      if (inst->kind == TermNode::Kind::Numeral && inst->num > 0)
        return k4_collect_term(body->a, mk_numeral(inst->num - 1), v, shadowed, subst);
      return false;
    case TermNode::Kind::Add:
    case TermNode::Kind::Mul:
      return inst->kind == body->kind &&
             k4_collect_term(body->a, inst->a, v, shadowed, subst) &&
             k4_collect_term(body->b, inst->b, v, shadowed, subst);
  }
  return false;
}

bool k4_collect(const Formula& body, const Formula& inst, VarIndex v, bool shadowed,
                std::optional<Term>& subst) {
  if (body->kind != inst->kind) return false;
  switch (body->kind) {
    case FormulaNode::Kind::Eq:
      return k4_collect_term(body->l, inst->l, v, shadowed, subst) &&
             k4_collect_term(body->r, inst->r, v, shadowed, subst);
    case FormulaNode::Kind::Not:
      return k4_collect(body->f, inst->f, v, shadowed, subst);
    case FormulaNode::Kind::Implies:
      return k4_collect(body->f, inst->f, v, shadowed, subst) &&
             k4_collect(body->g, inst->g, v, shadowed, subst);
    case FormulaNode::Kind::ForAll:
      if (body->var != inst->var) return false;
      return k4_collect(body->f, inst->f, v, shadowed || body->var == v, subst);
  }
  return false;
}

// (A x_i)A(x_i) => A(t), t free for x_i in A
bool match_k4(const Formula& f) {
  if (!is_implies(f)) return false;
  if (f->f->kind != FormulaNode::Kind::ForAll) return false;
  VarIndex v = f->f->var;
  const Formula& body = f->f->f;
  std::optional<Term> subst;
  if (!k4_collect(body, f->g, v, false, subst)) return false;
  Term t = subst ? *subst : mk_var(v);
  if (!free_for(t, v, body)) return false;
  // guard against walks that matched everything except actual substitution
  return formula_equal(f->g, substitute(body, v, t));
}

// (A x_i)(A => B) => (A => (A x_i)B), x_i not free in A
bool match_k5(const Formula& f) {
  if (!is_implies(f)) return false;
  const Formula& p = f->f;
  const Formula& q = f->g;
  if (p->kind != FormulaNode::Kind::ForAll || !is_implies(p->f)) return false;
  if (!is_implies(q) || q->g->kind != FormulaNode::Kind::ForAll) return false;
  VarIndex v = p->var;
  if (q->g->var != v) return false;
  const Formula &a = p->f->f, &b = p->f->g;
  if (!formula_equal(q->f, a) || !formula_equal(q->g->f, b)) return false;
  return free_vars(a).count(v) == 0;
}

}  // namespace

bool match_axiom(const Formula& f, AxiomTag tag) {
  switch (tag) {
    case AxiomTag::K1: return match_k1(f);
    case AxiomTag::K2: return match_k2(f);
    case AxiomTag::K3: return match_k3(f);
    case AxiomTag::K4: return match_k4(f);
    case AxiomTag::K5: return match_k5(f);
    default: return formula_equal(f, axiom_formula(tag));
  }
}

// -- proof checking ------------------------------------------------------------

namespace {

struct LineTable {
  std::map<std::int64_t, const ProofLine*> by_index;

  const ProofLine* find_before(std::int64_t ref, std::int64_t current) const {
    auto it = by_index.find(ref);
    if (it == by_index.end() || ref >= current) return nullptr;
    return it->second;
  }
};

std::string missing_ref(std::int64_t ref) {
  return "reference to missing line " + std::to_string(ref);
}

// Recovers the induction variable for ind-open: some x with
// step == (F -> F[x := x']).
std::optional<VarIndex> open_induction_var(const Formula& concl, const Formula& step) {
  if (step->kind != FormulaNode::Kind::Implies) return std::nullopt;
  if (!formula_equal(step->f, concl)) return std::nullopt;
  auto fv = free_vars(concl);
  for (VarIndex v : fv) {
    Formula want = substitute(concl, v, mk_succ(mk_var(v)));
    if (formula_equal(step->g, want)) return v;
  }
  if (fv.empty() && formula_equal(step->g, concl)) return 0;  // vacuous induction
  return std::nullopt;
}

}  // namespace

Verdict check_proof(const ProofScript& s, const SystemProfile& p,
                    const CheckOptions& opts) {
  LineTable table;
  bool used_hyp = false, used_sampled = false;
  for (const ProofLine& line : s.lines) {
    const Formula& cur = line.formula;
    const Justification& j = line.just;
    auto reject = [&](const std::string& why) { return Verdict::bad(line.index, why); };
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        if (!p.has(j.tag))
          return reject("axiom " + axiom_tag_name(j.tag) + " not in profile");
        if (!match_axiom(cur, j.tag))
          return reject("formula does not match axiom " + axiom_tag_name(j.tag));
        break;
      }
      case Justification::Kind::Hyp:
        used_hyp = true;
        break;
      case Justification::Kind::MP: {
        if (!p.has(Rule::MP)) return reject("rule MP not in profile");
        const ProofLine* a = table.find_before(j.i, line.index);
        const ProofLine* b = table.find_before(j.j, line.index);
        if (!a) return reject(missing_ref(j.i));
        if (!b) return reject(missing_ref(j.j));
        if (b->formula->kind != FormulaNode::Kind::Implies ||
            !formula_equal(b->formula->f, a->formula) ||
            !formula_equal(b->formula->g, cur))
          return reject("mp: line " + std::to_string(j.j) + " is not (line " +
                        std::to_string(j.i) + " -> this line)");
        break;
      }
      case Justification::Kind::Gen: {
        if (!p.has(Rule::GEN)) return reject("rule GEN not in profile");
        const ProofLine* a = table.find_before(j.i, line.index);
        if (!a) return reject(missing_ref(j.i));
        if (cur->kind != FormulaNode::Kind::ForAll || cur->var != j.var ||
            !formula_equal(cur->f, a->formula))
          return reject("gen: this line is not (A x" + std::to_string(j.var) +
                        ") applied to line " + std::to_string(j.i));
        break;
      }
      case Justification::Kind::IndClosed: {
        if (!p.has(Induction::Closed)) return reject("rule IND-CLOSED not in profile");
        const ProofLine* base = table.find_before(j.i, line.index);
        const ProofLine* step = table.find_before(j.j, line.index);
        if (!base) return reject(missing_ref(j.i));
        if (!step) return reject(missing_ref(j.j));
        if (cur->kind != FormulaNode::Kind::ForAll)
          return reject("ind-closed: conclusion must be universal");
        VarIndex x = cur->var;
        const Formula& body = cur->f;
        if (!formula_equal(base->formula, substitute(body, x, mk_zero())))
          return reject("ind-closed: line " + std::to_string(j.i) + " is not F[x" +
                        std::to_string(x) + " := 0]");
        Formula want_step = mk_forall(
            x, mk_implies(body, substitute(body, x, mk_succ(mk_var(x)))));
        if (!formula_equal(step->formula, want_step))
          return reject("ind-closed: line " + std::to_string(j.j) +
                        " is not (A x" + std::to_string(x) + ")(F -> F[x" +
                        std::to_string(x) + " := x" + std::to_string(x) + "'])");
        break;
      }
      case Justification::Kind::IndOpen: {
        if (!p.has(Induction::Open)) return reject("rule IND-OPEN not in profile");
        const ProofLine* base = table.find_before(j.i, line.index);
        const ProofLine* step = table.find_before(j.j, line.index);
        if (!base) return reject(missing_ref(j.i));
        if (!step) return reject(missing_ref(j.j));
        auto x = open_induction_var(cur, step->formula);
        if (!x)
          return reject("ind-open: line " + std::to_string(j.j) +
                        " is not (F -> F[x := x']) for this line");
        Formula want_base =
            *x == 0 ? cur : substitute(cur, *x, mk_zero());
        if (!formula_equal(base->formula, want_base))
          return reject("ind-open: line " + std::to_string(j.i) + " is not F[x := 0]");
        break;
      }
      case Justification::Kind::OmegaNum: {
        if (!p.has(Rule::OMEGA_NUM)) return reject("rule OMEGA-NUM not in profile");
        const ProofLine* a = table.find_before(j.i, line.index);
        if (!a) return reject(missing_ref(j.i));
        auto fv = free_vars(a->formula);
        if (fv.empty())
          return reject("omega-num: line " + std::to_string(j.i) +
                        " has no free variable");
        bool matched = false;
        for (VarIndex v : fv) {
          if (formula_equal(cur, substitute(a->formula, v, mk_numeral(j.n)))) {
            matched = true;
            break;
          }
        }
        if (!matched)
          return reject("omega-num: this line is not line " + std::to_string(j.i) +
                        " at the numeral " + to_decimal(j.n));
        break;
      }
      case Justification::Kind::OmegaSpec: {
        if (!p.has(Rule::OMEGA_SPEC)) return reject("rule OMEGA-SPEC not in profile");
        OmegaSpecCertificate cert;
        try {
          cert = load_certificate(opts.cert_dir + "/" + j.cert_path);
        } catch (const Error& e) {
          return reject(std::string("omega-spec: ") + e.what());
        }
        if (!formula_equal(cur, cert.target))
          return reject("omega-spec: this line is not the certificate target");
        CertVerdict cv = check_certificate(cert, p, opts.codec);
        if (!cv.certified()) return reject("omega-spec: " + cv.describe());
        used_sampled = true;
        break;
      }
    }
    table.by_index[line.index] = &line;
  }
  return Verdict::ok(used_hyp, used_sampled);
}

// -- certificates ----------------------------------------------------------------

std::string CertVerdict::describe() const {
  switch (kind) {
    case Kind::CertifiedUpTo: return "certified up to n=" + to_decimal(n) +
                                     " (sampled, not a totality proof)";
    case Kind::BoundViolatedAt:
      return "bound violated at n=" + to_decimal(n) +
             (detail.empty() ? "" : ": " + detail);
    case Kind::InvalidTemplateAt:
      return "invalid template at n=" + to_decimal(n) +
             (detail.empty() ? "" : ": " + detail);
  }
  return "?";
}

OmegaSpecCertificate parse_certificate(const std::string& text) {
  OmegaSpecCertificate c;
  c.placeholder = "?n";
  bool have_target = false, have_bound = false, have_horizon = false;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("@target:", 0) == 0) {
      c.target = parse_formula(trim(t.substr(8)));
      have_target = true;
    } else if (t.rfind("@bound:", 0) == 0) {
      c.bound_k = from_decimal(trim(t.substr(7)));
      have_bound = true;
    } else if (t.rfind("@horizon:", 0) == 0) {
      c.horizon = from_decimal(trim(t.substr(9)));
      have_horizon = true;
    } else if (t.rfind("@placeholder:", 0) == 0) {
      c.placeholder = trim(t.substr(13));
      if (c.placeholder.empty()) throw Error("empty placeholder token");
    } else if (t.rfind("@name:", 0) == 0) {
      c.name = trim(t.substr(6));
    } else {
      c.template_lines.push_back(t);
    }
  }
  if (!have_target || !have_bound || !have_horizon)
    throw Error("certificate needs @target, @bound and @horizon");
  if (c.target->kind != FormulaNode::Kind::ForAll)
    throw Error("certificate target must be universal");
  if (c.template_lines.empty()) throw Error("certificate has no template lines");
  return c;
}

OmegaSpecCertificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open certificate: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_certificate(buf.str());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

ProofScript instantiate_template(const OmegaSpecCertificate& c, const BigNat& n) {
  if (n > 100000) throw Error("template numeral too large to spell out");
  std::string numeral_text = "0" + std::string(static_cast<std::size_t>(n), '\'');
  std::string decimal_text = to_decimal(n);
  std::string joined;
  for (const std::string& raw : c.template_lines) {
    // formula field gets the numeral, justification field the decimal
    std::size_t last_bar = raw.rfind('|');
    std::string fml = raw.substr(0, last_bar == std::string::npos ? raw.size() : last_bar);
    std::string just = last_bar == std::string::npos ? "" : raw.substr(last_bar);
    auto replace_all = [](std::string s, const std::string& from, const std::string& to) {
      std::size_t pos = 0;
      while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
      }
      return s;
    };
    joined += replace_all(fml, c.placeholder, numeral_text) +
              replace_all(just, c.placeholder, decimal_text) + "\n";
  }
  ProofScript s = parse_script(joined);
  s.name = c.name.empty() ? "omega-spec-instance" : c.name;
  return s;
}

CertVerdict check_certificate(const OmegaSpecCertificate& c, const SystemProfile& p,
                              Codec codec) {
  if (!p.has(Rule::OMEGA_SPEC))
    throw Error("check_certificate requires a profile with OMEGA-SPEC");
  // instances are checked without OMEGA-SPEC: no nested certificates
  SystemProfile inner = p;
  inner.rules.erase(Rule::OMEGA_SPEC);

  VarIndex v = c.target->var;
  const Formula& body = c.target->f;

  for (BigNat n = 0; n <= c.horizon; n += 1) {
    ProofScript inst;
    try {
      inst = instantiate_template(c, n);
    } catch (const Error& e) {
      return {CertVerdict::Kind::InvalidTemplateAt, n, e.what()};
    }
    if (inst.uses_hypotheses())
      return {CertVerdict::Kind::InvalidTemplateAt, n, "template uses hypotheses"};
    Verdict verdict = check_proof(inst, inner);
    if (!verdict.accepted)
      return {CertVerdict::Kind::InvalidTemplateAt, n,
              "line " + std::to_string(verdict.bad_line) + ": " + verdict.reason};
    if (inst.lines.empty() ||
        !formula_equal(inst.lines.back().formula, substitute(body, v, mk_numeral(n))))
      return {CertVerdict::Kind::InvalidTemplateAt, n,
              "last line is not the target instance"};
    GodelNumber gn = encode(inst, codec);
    bool below;
    if (codec == Codec::Positional) {
      // positional order is (length, lex); works even when the value itself
      // could never be written in decimal
      below = gn_compare(gn, gn_from_value(Codec::Positional, c.bound_k)) < 0;
    } else {
      // prime-power proof numbers explode quickly; one that cannot even be
      // materialized is certainly past any bound a certificate can state
      try {
        below = gn.value() < c.bound_k;
      } catch (const ValueTooLarge&) {
        below = false;
      }
    }
    if (!below)
      return {CertVerdict::Kind::BoundViolatedAt, n,
              "proof Godel number reaches the bound"};
  }
  return {CertVerdict::Kind::CertifiedUpTo, c.horizon, ""};
}

}  // namespace pacheck
