#include "pacheck/syntax.hpp"

#include <cassert>

namespace pacheck {

namespace {
constexpr int kMaxParseDepth = 10000;
constexpr VarIndex kMaxVarIndex = 1000000000;
// Succ chains over a non-numeral base are materialized node by node.
const BigNat kMaxSuccChain = 1000000;
}  // namespace

// -- constructors ------------------------------------------------------------

Term mk_zero() { return mk_numeral(0); }

Term mk_numeral(const BigNat& n) {
  if (n < 0) throw Error("numeral: negative");
  auto t = std::make_shared<TermNode>();
  t->kind = TermNode::Kind::Numeral;
  t->num = n;
  return t;
}

Term mk_var(VarIndex i) {
  if (i < 1) throw Error("variable index must be >= 1");
  auto t = std::make_shared<TermNode>();
  t->kind = TermNode::Kind::Var;
  t->var = i;
  return t;
}

Term mk_succ(const Term& t) {
  if (t->kind == TermNode::Kind::Numeral) return mk_numeral(t->num + 1);
  auto s = std::make_shared<TermNode>();
  s->kind = TermNode::Kind::Succ;
  s->a = t;
  return s;
}

static Term mk_bin(TermNode::Kind k, const Term& l, const Term& r) {
  auto t = std::make_shared<TermNode>();
  t->kind = k;
  t->a = l;
  t->b = r;
  return t;
}

Term mk_add(const Term& l, const Term& r) { return mk_bin(TermNode::Kind::Add, l, r); }
Term mk_mul(const Term& l, const Term& r) { return mk_bin(TermNode::Kind::Mul, l, r); }

Formula mk_eq(const Term& l, const Term& r) {
  auto f = std::make_shared<FormulaNode>();
  f->kind = FormulaNode::Kind::Eq;
  f->l = l;
  f->r = r;
  return f;
}

Formula mk_not(const Formula& f) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaNode::Kind::Not;
  n->f = f;
  return n;
}

Formula mk_implies(const Formula& a, const Formula& b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaNode::Kind::Implies;
  n->f = a;
  n->g = b;
  return n;
}

Formula mk_forall(VarIndex v, const Formula& body) {
  if (v < 1) throw Error("variable index must be >= 1");
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaNode::Kind::ForAll;
  n->var = v;
  n->f = body;
  return n;
}

Formula mk_and(const Formula& a, const Formula& b) {
  return mk_not(mk_implies(a, mk_not(b)));
}

Formula mk_or(const Formula& a, const Formula& b) {
  return mk_implies(mk_not(a), b);
}

Formula mk_exists(VarIndex v, const Formula& body) {
  return mk_not(mk_forall(v, mk_not(body)));
}

Formula mk_exists_unique(VarIndex v, const Formula& body) {
  std::set<VarIndex> used = all_vars(body);
  used.insert(v);
  VarIndex y = least_fresh(used);
  Formula inst = substitute(body, v, mk_var(y));
  Formula uniq = mk_forall(y, mk_implies(inst, mk_eq(mk_var(y), mk_var(v))));
  return mk_exists(v, mk_and(body, uniq));
}

Formula mk_less(const Term& l, const Term& r) {
  std::set<VarIndex> used = term_vars(l);
  for (VarIndex v : term_vars(r)) used.insert(v);
  VarIndex w = least_fresh(used);
  return mk_exists(w, mk_eq(mk_add(l, mk_succ(mk_var(w))), r));
}

// -- structural operations ---------------------------------------------------

bool term_equal(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermNode::Kind::Numeral: return a->num == b->num;
    case TermNode::Kind::Var: return a->var == b->var;
    case TermNode::Kind::Succ: return term_equal(a->a, b->a);
    case TermNode::Kind::Add:
    case TermNode::Kind::Mul:
      return term_equal(a->a, b->a) && term_equal(a->b, b->b);
  }
  return false;
}

bool formula_equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaNode::Kind::Eq:
      return term_equal(a->l, b->l) && term_equal(a->r, b->r);
    case FormulaNode::Kind::Not: return formula_equal(a->f, b->f);
    case FormulaNode::Kind::Implies:
      return formula_equal(a->f, b->f) && formula_equal(a->g, b->g);
    case FormulaNode::Kind::ForAll:
      return a->var == b->var && formula_equal(a->f, b->f);
  }
  return false;
}

std::optional<BigNat> as_numeral(const Term& t) {
  if (t->kind == TermNode::Kind::Numeral) return t->num;
  return std::nullopt;
}

std::optional<BigNat> succ_count(const Term& t) { return as_numeral(t); }

static void term_vars_into(const Term& t, std::set<VarIndex>& out) {
  switch (t->kind) {
    case TermNode::Kind::Numeral: return;
    case TermNode::Kind::Var: out.insert(t->var); return;
    case TermNode::Kind::Succ: term_vars_into(t->a, out); return;
    case TermNode::Kind::Add:
    case TermNode::Kind::Mul:
      term_vars_into(t->a, out);
      term_vars_into(t->b, out);
      return;
  }
}

std::set<VarIndex> term_vars(const Term& t) {
  std::set<VarIndex> out;
  term_vars_into(t, out);
  return out;
}

static void free_vars_into(const Formula& f, std::set<VarIndex>& bound,
                           std::set<VarIndex>& out) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq: {
      std::set<VarIndex> tv;
      term_vars_into(f->l, tv);
      term_vars_into(f->r, tv);
      for (VarIndex v : tv)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case FormulaNode::Kind::Not: free_vars_into(f->f, bound, out); return;
    case FormulaNode::Kind::Implies:
      free_vars_into(f->f, bound, out);
      free_vars_into(f->g, bound, out);
      return;
    case FormulaNode::Kind::ForAll: {
      bool was = bound.count(f->var) > 0;
      bound.insert(f->var);
      free_vars_into(f->f, bound, out);
      if (!was) bound.erase(f->var);
      return;
    }
  }
}

std::set<VarIndex> free_vars(const Formula& f) {
  std::set<VarIndex> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

static void all_vars_into(const Formula& f, std::set<VarIndex>& out) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq:
      term_vars_into(f->l, out);
      term_vars_into(f->r, out);
      return;
    case FormulaNode::Kind::Not: all_vars_into(f->f, out); return;
    case FormulaNode::Kind::Implies:
      all_vars_into(f->f, out);
      all_vars_into(f->g, out);
      return;
    case FormulaNode::Kind::ForAll:
      out.insert(f->var);
      all_vars_into(f->f, out);
      return;
  }
}

std::set<VarIndex> all_vars(const Formula& f) {
  std::set<VarIndex> out;
  all_vars_into(f, out);
  return out;
}

VarIndex least_fresh(const std::set<VarIndex>& used) {
  VarIndex i = 1;
  while (used.count(i)) i++;
  return i;
}

Term substitute_term(const Term& t, VarIndex v, const Term& repl) {
  switch (t->kind) {
    case TermNode::Kind::Numeral: return t;
    case TermNode::Kind::Var: return t->var == v ? repl : t;
    case TermNode::Kind::Succ: return mk_succ(substitute_term(t->a, v, repl));
    case TermNode::Kind::Add:
      return mk_add(substitute_term(t->a, v, repl), substitute_term(t->b, v, repl));
    case TermNode::Kind::Mul:
      return mk_mul(substitute_term(t->a, v, repl), substitute_term(t->b, v, repl));
  }
  return t;
}

static bool formula_has_free(const Formula& f, VarIndex v) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq: {
      std::set<VarIndex> tv;
      term_vars_into(f->l, tv);
      term_vars_into(f->r, tv);
      return tv.count(v) > 0;
    }
    case FormulaNode::Kind::Not: return formula_has_free(f->f, v);
    case FormulaNode::Kind::Implies:
      return formula_has_free(f->f, v) || formula_has_free(f->g, v);
    case FormulaNode::Kind::ForAll:
      return f->var != v && formula_has_free(f->f, v);
  }
  return false;
}

Formula substitute(const Formula& f, VarIndex v, const Term& repl) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq:
      return mk_eq(substitute_term(f->l, v, repl), substitute_term(f->r, v, repl));
    case FormulaNode::Kind::Not: return mk_not(substitute(f->f, v, repl));
    case FormulaNode::Kind::Implies:
      return mk_implies(substitute(f->f, v, repl), substitute(f->g, v, repl));
    case FormulaNode::Kind::ForAll: {
      if (f->var == v) return f;
      if (!formula_has_free(f->f, v)) return f;
      if (term_vars(repl).count(f->var))
        throw CaptureError("substitution would capture x" + std::to_string(f->var));
      return mk_forall(f->var, substitute(f->f, v, repl));
    }
  }
  return f;
}

Formula substitute_avoiding_capture(const Formula& f, VarIndex v, const Term& repl) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq:
    case FormulaNode::Kind::Not:
    case FormulaNode::Kind::Implies:
      break;
    case FormulaNode::Kind::ForAll: {
      if (f->var == v) return f;
      if (!formula_has_free(f->f, v)) return f;
      if (term_vars(repl).count(f->var)) {
        std::set<VarIndex> used = all_vars(f->f);
        for (VarIndex u : term_vars(repl)) used.insert(u);
        used.insert(v);
        VarIndex w = least_fresh(used);
        Formula renamed = substitute(f->f, f->var, mk_var(w));
        return mk_forall(w, substitute_avoiding_capture(renamed, v, repl));
      }
      return mk_forall(f->var, substitute_avoiding_capture(f->f, v, repl));
    }
  }
  switch (f->kind) {
    case FormulaNode::Kind::Eq:
      return mk_eq(substitute_term(f->l, v, repl), substitute_term(f->r, v, repl));
    case FormulaNode::Kind::Not:
      return mk_not(substitute_avoiding_capture(f->f, v, repl));
    case FormulaNode::Kind::Implies:
      return mk_implies(substitute_avoiding_capture(f->f, v, repl),
                        substitute_avoiding_capture(f->g, v, repl));
    default: return f;  // unreachable
  }
}

bool free_for(const Term& t, VarIndex v, const Formula& f) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq: return true;
    case FormulaNode::Kind::Not: return free_for(t, v, f->f);
    case FormulaNode::Kind::Implies:
      return free_for(t, v, f->f) && free_for(t, v, f->g);
    case FormulaNode::Kind::ForAll: {
      if (f->var == v) return true;
      if (formula_has_free(f->f, v) && term_vars(t).count(f->var)) return false;
      return free_for(t, v, f->f);
    }
  }
  return true;
}

// -- printing ----------------------------------------------------------------

void render_term(const Term& t, Rope& out) {
  switch (t->kind) {
    case TermNode::Kind::Numeral:
      out.append('0');
      out.append('\'', t->num);
      return;
    case TermNode::Kind::Var:
      out.append('x');
      out.append(std::to_string(t->var));
      return;
    case TermNode::Kind::Succ:
      render_term(t->a, out);
      out.append('\'');
      return;
    case TermNode::Kind::Add:
    case TermNode::Kind::Mul:
      out.append('(');
      render_term(t->a, out);
      out.append(t->kind == TermNode::Kind::Add ? " + " : " * ");
      render_term(t->b, out);
      out.append(')');
      return;
  }
}

void render_formula(const Formula& f, Rope& out) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq:
      out.append('(');
      render_term(f->l, out);
      out.append(" = ");
      render_term(f->r, out);
      out.append(')');
      return;
    case FormulaNode::Kind::Not:
      out.append('~');
      render_formula(f->f, out);
      return;
    case FormulaNode::Kind::Implies:
      out.append('(');
      render_formula(f->f, out);
      out.append(" -> ");
      render_formula(f->g, out);
      out.append(')');
      return;
    case FormulaNode::Kind::ForAll:
      out.append("(A x");
      out.append(std::to_string(f->var));
      out.append(')');
      render_formula(f->f, out);
      return;
  }
}

Rope render_formula(const Formula& f) {
  Rope r;
  render_formula(f, r);
  return r;
}

std::string print_term(const Term& t) {
  Rope r;
  render_term(t, r);
  return r.to_string();
}

std::string print_formula(const Formula& f) {
  Rope r;
  render_formula(f, r);
  return r.to_string();
}

static void print_term_abbrev(const Term& t, const BigNat& threshold, std::string& out) {
  switch (t->kind) {
    case TermNode::Kind::Numeral:
      if (t->num > threshold) {
        out += "0'{" + to_decimal(t->num) + "}";
      } else {
        out += '0';
        out.append(static_cast<std::size_t>(t->num), '\'');
      }
      return;
    case TermNode::Kind::Var: out += "x" + std::to_string(t->var); return;
    case TermNode::Kind::Succ:
      print_term_abbrev(t->a, threshold, out);
      out += '\'';
      return;
    case TermNode::Kind::Add:
    case TermNode::Kind::Mul:
      out += '(';
      print_term_abbrev(t->a, threshold, out);
      out += t->kind == TermNode::Kind::Add ? " + " : " * ";
      print_term_abbrev(t->b, threshold, out);
      out += ')';
      return;
  }
}

static void print_formula_abbrev_into(const Formula& f, const BigNat& threshold,
                                      std::string& out) {
  switch (f->kind) {
    case FormulaNode::Kind::Eq:
      out += '(';
      print_term_abbrev(f->l, threshold, out);
      out += " = ";
      print_term_abbrev(f->r, threshold, out);
      out += ')';
      return;
    case FormulaNode::Kind::Not:
      out += '~';
      print_formula_abbrev_into(f->f, threshold, out);
      return;
    case FormulaNode::Kind::Implies:
      out += '(';
      print_formula_abbrev_into(f->f, threshold, out);
      out += " -> ";
      print_formula_abbrev_into(f->g, threshold, out);
      out += ')';
      return;
    case FormulaNode::Kind::ForAll:
      out += "(A x" + std::to_string(f->var) + ")";
      print_formula_abbrev_into(f->f, threshold, out);
      return;
  }
}

std::string print_formula_abbrev(const Formula& f, const BigNat& threshold) {
  std::string out;
  print_formula_abbrev_into(f, threshold, out);
  return out;
}

// -- parsing -----------------------------------------------------------------

namespace {

// Cursor over rope runs; apostrophe runs are consumed whole so numerals with
// astronomical successor counts tokenize in O(1).
class Cursor {
 public:
  explicit Cursor(const Rope& r) : runs_(r.runs()) {}

  std::optional<uint8_t> peek() const {
    if (ri_ >= runs_.size()) return std::nullopt;
    return runs_[ri_].byte;
  }

  uint8_t next() {
    auto c = peek();
    if (!c) throw ParseError("unexpected end of input", pos_);
    advance(1);
    return *c;
  }

  // Consumes the rest of the current run if it holds `byte`; returns count.
  BigNat take_run(uint8_t byte) {
    if (ri_ >= runs_.size() || runs_[ri_].byte != byte) return 0;
    BigNat n = runs_[ri_].count - off_;
    pos_ += n;
    ri_++;
    off_ = 0;
    return n;
  }

  void skip_ws() {
    while (auto c = peek()) {
      if (*c == ' ' || *c == '\t' || *c == '\r' || *c == '\n')
        advance(1);
      else
        break;
    }
  }

  const BigNat& pos() const { return pos_; }
  bool at_end() const { return ri_ >= runs_.size(); }

 private:
  void advance(const BigNat& n) {
    BigNat left = n;
    while (left > 0 && ri_ < runs_.size()) {
      BigNat avail = runs_[ri_].count - off_;
      if (avail <= left) {
        left -= avail;
        pos_ += avail;
        ri_++;
        off_ = 0;
      } else {
        off_ += left;
        pos_ += left;
        left = 0;
      }
    }
  }

  const std::vector<Rope::Run>& runs_;
  std::size_t ri_ = 0;
  BigNat off_ = 0;
  BigNat pos_ = 0;
};

struct Parser {
  Cursor cur;
  explicit Parser(const Rope& r) : cur(r) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur.pos()); }

  void expect(char c) {
    cur.skip_ws();
    auto got = cur.peek();
    if (!got || *got != static_cast<uint8_t>(c))
      fail(std::string("expected '") + c + "'");
    cur.next();
  }

  VarIndex parse_var() {
    cur.skip_ws();
    auto c = cur.peek();
    if (!c || *c != 'x') fail("expected variable");
    cur.next();
    std::string digits;
    while (auto d = cur.peek()) {
      if (*d >= '0' && *d <= '9') {
        digits += static_cast<char>(*d);
        cur.next();
      } else
        break;
    }
    if (digits.empty()) fail("expected variable index");
    if (digits[0] == '0') fail("variable index has leading zero");
    if (digits.size() > 9) fail("variable index too large");
    long v = std::stol(digits);
    if (v < 1 || v > kMaxVarIndex) fail("variable index out of range");
    return static_cast<VarIndex>(v);
  }

  Term apply_primes(Term t) {
    for (;;) {
      auto c = cur.peek();
      if (!c || *c != '\'') return t;
      BigNat n = cur.take_run('\'');
      if (auto num = as_numeral(t)) {
        t = mk_numeral(*num + n);
      } else {
        if (n > kMaxSuccChain) fail("successor run too long for non-numeral base");
        for (BigNat i = 0; i < n; i++) t = mk_succ(t);
      }
    }
  }

  // An expression is either a term or a formula; which one becomes clear only
  // at the operator inside a parenthesized form.
  struct Expr {
    Term t;
    Formula f;
    bool is_term() const { return t != nullptr; }
  };

  Term need_term(Expr e) {
    if (!e.is_term()) fail("expected a term");
    return e.t;
  }
  Formula need_formula(Expr e) {
    if (e.is_term()) fail("expected a formula");
    return e.f;
  }

  Expr parse_expr(int depth) {
    if (depth > kMaxParseDepth) fail("nesting too deep");
    cur.skip_ws();
    auto c = cur.peek();
    if (!c) fail("unexpected end of input");
    switch (*c) {
      case '0': {
        cur.next();
        return Expr{apply_primes(mk_zero()), nullptr};
      }
      case 'x': {
        VarIndex v = parse_var();
        return Expr{apply_primes(mk_var(v)), nullptr};
      }
      case '~': {
        cur.next();
        Formula f = need_formula(parse_expr(depth + 1));
        return Expr{nullptr, mk_not(f)};
      }
      case '(': {
        cur.next();
        cur.skip_ws();
        auto q = cur.peek();
        if (q && (*q == 'A' || *q == 'E')) return parse_quantified(depth, *q);
        Expr left = parse_expr(depth + 1);
        cur.skip_ws();
        auto op = cur.peek();
        if (!op) fail("expected operator");
        switch (*op) {
          case '+':
          case '*': {
            char o = static_cast<char>(cur.next());
            Term l = need_term(left);
            Term r = need_term(parse_expr(depth + 1));
            expect(')');
            Term res = o == '+' ? mk_add(l, r) : mk_mul(l, r);
            return Expr{apply_primes(res), nullptr};
          }
          case '=': {
            cur.next();
            Term l = need_term(left);
            Term r = need_term(parse_expr(depth + 1));
            expect(')');
            return Expr{nullptr, mk_eq(l, r)};
          }
          case '<': {
            cur.next();
            Term l = need_term(left);
            Term r = need_term(parse_expr(depth + 1));
            expect(')');
            return Expr{nullptr, mk_less(l, r)};
          }
          case '-': {
            cur.next();
            auto c2 = cur.peek();
            if (!c2 || *c2 != '>') fail("expected '->'");
            cur.next();
            Formula a = need_formula(left);
            Formula b = need_formula(parse_expr(depth + 1));
            expect(')');
            return Expr{nullptr, mk_implies(a, b)};
          }
          case '&': {
            cur.next();
            Formula a = need_formula(left);
            Formula b = need_formula(parse_expr(depth + 1));
            expect(')');
            return Expr{nullptr, mk_and(a, b)};
          }
          case '|': {
            cur.next();
            Formula a = need_formula(left);
            Formula b = need_formula(parse_expr(depth + 1));
            expect(')');
            return Expr{nullptr, mk_or(a, b)};
          }
          default: fail("unknown operator");
        }
      }
      default: fail(std::string("unknown symbol '") + static_cast<char>(*c) + "'");
    }
  }

  Expr parse_quantified(int depth, uint8_t q) {
    cur.next();  // 'A' or 'E'
    bool unique = false;
    if (q == 'E') {
      auto c = cur.peek();
      if (c && *c == '1') {
        cur.next();
        unique = true;
      }
    }
    VarIndex v = parse_var();
    expect(')');
    Formula body = need_formula(parse_expr(depth + 1));
    if (q == 'A') return Expr{nullptr, mk_forall(v, body)};
    if (unique) return Expr{nullptr, mk_exists_unique(v, body)};
    return Expr{nullptr, mk_exists(v, body)};
  }
};

}  // namespace

Formula parse_formula(const Rope& text) {
  Parser p(text);
  Formula f = p.need_formula(p.parse_expr(0));
  p.cur.skip_ws();
  if (!p.cur.at_end()) p.fail("trailing input");
  return f;
}

Term parse_term(const Rope& text) {
  Parser p(text);
  Term t = p.need_term(p.parse_expr(0));
  p.cur.skip_ws();
  if (!p.cur.at_end()) p.fail("trailing input");
  return t;
}

Formula parse_formula(const std::string& text) { return parse_formula(Rope(text)); }
Term parse_term(const std::string& text) { return parse_term(Rope(text)); }

}  // namespace pacheck
