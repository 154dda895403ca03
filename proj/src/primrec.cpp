#include "pacheck/primrec.hpp"

#include <fstream>
#include <sstream>

#include "pacheck/beta.hpp"

namespace pacheck {

// -- construction and evaluation ----------------------------------------------

PRFn pr_zero(unsigned arity) {
  auto n = std::make_shared<PRFnNode>();
  n->kind = PRFnNode::Kind::Zero;
  n->arity = arity;
  return n;
}

PRFn pr_succ() {
  auto n = std::make_shared<PRFnNode>();
  n->kind = PRFnNode::Kind::Succ;
  n->arity = 1;
  return n;
}

PRFn pr_proj(unsigned arity, unsigned index) {
  if (index < 1 || index > arity) throw Error("proj: index out of range");
  auto n = std::make_shared<PRFnNode>();
  n->kind = PRFnNode::Kind::Proj;
  n->arity = arity;
  n->proj_index = index;
  return n;
}

PRFn pr_comp(PRFn f, std::vector<PRFn> args) {
  if (!f || args.empty()) throw Error("comp: needs an outer function and arguments");
  if (f->arity != args.size())
    throw Error("comp: outer arity " + std::to_string(f->arity) + " != " +
                std::to_string(args.size()) + " inner functions");
  unsigned a = args[0]->arity;
  for (const auto& g : args)
    if (g->arity != a) throw Error("comp: inner functions must share one arity");
  auto n = std::make_shared<PRFnNode>();
  n->kind = PRFnNode::Kind::Comp;
  n->arity = a;
  n->f = std::move(f);
  n->args = std::move(args);
  return n;
}

PRFn pr_rec(PRFn g, PRFn h) {
  if (!g || !h) throw Error("rec: needs base and step");
  if (h->arity != g->arity + 2)
    throw Error("rec: step arity must be base arity + 2");
  auto n = std::make_shared<PRFnNode>();
  n->kind = PRFnNode::Kind::Rec;
  n->arity = g->arity + 1;
  n->f = std::move(g);
  n->h = std::move(h);
  return n;
}

unsigned pr_arity(const PRFn& f) { return f->arity; }

BigNat eval_pr(const PRFn& f, const std::vector<BigNat>& args) {
  if (args.size() != f->arity)
    throw Error("eval_pr: arity mismatch (want " + std::to_string(f->arity) +
                ", got " + std::to_string(args.size()) + ")");
  switch (f->kind) {
    case PRFnNode::Kind::Zero: return 0;
    case PRFnNode::Kind::Succ: return args[0] + 1;
    case PRFnNode::Kind::Proj: return args[f->proj_index - 1];
    case PRFnNode::Kind::Comp: {
      std::vector<BigNat> inner;
      inner.reserve(f->args.size());
      for (const auto& g : f->args) inner.push_back(eval_pr(g, args));
      return eval_pr(f->f, inner);
    }
    case PRFnNode::Kind::Rec: {
      std::vector<BigNat> prefix(args.begin(), args.end() - 1);
      const BigNat& y = args.back();
      BigNat acc = eval_pr(f->f, prefix);
      std::vector<BigNat> step = prefix;
      step.push_back(0);
      step.push_back(acc);
      for (BigNat i = 0; i < y; i += 1) {
        step[prefix.size()] = i;
        step[prefix.size() + 1] = acc;
        acc = eval_pr(f->h, step);
      }
      return acc;
    }
  }
  throw Error("bad PR function");
}

BigNat rank(const PRFn& f) {
  switch (f->kind) {
    case PRFnNode::Kind::Zero:
    case PRFnNode::Kind::Succ:
    case PRFnNode::Kind::Proj: return 0;
    case PRFnNode::Kind::Comp: {
      BigNat m = rank(f->f);
      for (const auto& g : f->args) {
        BigNat r = rank(g);
        if (r > m) m = r;
      }
      return m + 1;
    }
    case PRFnNode::Kind::Rec: {
      BigNat a = rank(f->f), b = rank(f->h);
      return (a > b ? a : b) + 1;
    }
  }
  throw Error("bad PR function");
}

// -- compilation -----------------------------------------------------------------

namespace {

// Remaps a compiled formula's canonical free slots {1..n_slots} to the given
// terms, via temporary indices above everything in play.
Formula remap_slots(const Formula& f, const std::vector<Term>& slots) {
  std::set<VarIndex> used = all_vars(f);
  for (const Term& t : slots)
    for (VarIndex v : term_vars(t)) used.insert(v);
  VarIndex base = used.empty() ? 1 : *used.rbegin() + 1;
  Formula out = f;
  for (std::size_t k = 0; k < slots.size(); k++)
    out = substitute_avoiding_capture(out, static_cast<VarIndex>(k + 1),
                                      mk_var(base + static_cast<VarIndex>(k)));
  for (std::size_t k = 0; k < slots.size(); k++)
    out = substitute_avoiding_capture(out, base + static_cast<VarIndex>(k), slots[k]);
  return out;
}

std::vector<Term> slot_vars(unsigned n) {
  std::vector<Term> out;
  for (unsigned k = 1; k <= n; k++) out.push_back(mk_var(static_cast<VarIndex>(k)));
  return out;
}

}  // namespace

Formula compile_representation(const PRFn& f) {
  const unsigned k = f->arity;
  const VarIndex result = static_cast<VarIndex>(k + 1);
  switch (f->kind) {
    case PRFnNode::Kind::Zero: return mk_eq(mk_var(result), mk_zero());
    case PRFnNode::Kind::Succ: return mk_eq(mk_var(2), mk_succ(mk_var(1)));
    case PRFnNode::Kind::Proj:
      return mk_eq(mk_var(result), mk_var(static_cast<VarIndex>(f->proj_index)));
    case PRFnNode::Kind::Comp: {
      // (E w1)..(E wm)(H1(x, w1) & ... & Hm(x, wm) & G(w1..wm, x_{k+1}))
      std::vector<Formula> parts;
      for (const auto& g : f->args) parts.push_back(compile_representation(g));
      Formula outer = compile_representation(f->f);
      std::set<VarIndex> used;
      for (const auto& p : parts)
        for (VarIndex v : all_vars(p)) used.insert(v);
      for (VarIndex v : all_vars(outer)) used.insert(v);
      for (VarIndex v = 1; v <= result; v++) used.insert(v);
      std::vector<VarIndex> ws;
      for (std::size_t m = 0; m < f->args.size(); m++) {
        VarIndex w = least_fresh(used);
        used.insert(w);
        ws.push_back(w);
      }
      Formula conj;
      for (std::size_t m = 0; m < parts.size(); m++) {
        std::vector<Term> slots = slot_vars(k);
        slots.push_back(mk_var(ws[m]));
        Formula inst = remap_slots(parts[m], slots);
        conj = conj ? mk_and(conj, inst) : inst;
      }
      {
        std::vector<Term> slots;
        for (VarIndex w : ws) slots.push_back(mk_var(w));
        slots.push_back(mk_var(result));
        Formula inst = remap_slots(outer, slots);
        conj = conj ? mk_and(conj, inst) : inst;
      }
      for (auto it = ws.rbegin(); it != ws.rend(); ++it) conj = mk_exists(*it, conj);
      return conj;
    }
    case PRFnNode::Kind::Rec: {
      // (Eu)(Ev)[ ((Ew)(Bt(u,v,0,w) & G(x,w)) & Bt(u,v,x_k,x_{k+1}))
      //           & (Aw)(w < x_k -> (Ey)(Ez)(Bt(u,v,w,y) & Bt(u,v,(w+1),z)
      //                                       & H(x,w,y,z))) ]
      Formula gpart = compile_representation(f->f);
      Formula hpart = compile_representation(f->h);
      std::set<VarIndex> used = all_vars(gpart);
      for (VarIndex v : all_vars(hpart)) used.insert(v);
      for (VarIndex v : all_vars(build_bt_formula())) used.insert(v);
      for (VarIndex v = 1; v <= result; v++) used.insert(v);
      auto fresh = [&used]() {
        VarIndex v = least_fresh(used);
        used.insert(v);
        return v;
      };
      VarIndex u = fresh(), v = fresh(), w = fresh(), y = fresh(), z = fresh();
      const unsigned base_arity = f->arity - 1;  // arity of g
      const VarIndex rec_arg = static_cast<VarIndex>(f->arity);

      Term tu = mk_var(u), tv = mk_var(v), tw = mk_var(w);
      std::vector<Term> xs = slot_vars(base_arity);

      Formula conj1;
      {
        std::vector<Term> slots = xs;
        slots.push_back(mk_var(w));
        Formula g_inst = remap_slots(gpart, slots);
        conj1 = mk_exists(w, mk_and(bt_instance(tu, tv, mk_zero(), tw), g_inst));
      }
      Formula conj2 = bt_instance(tu, tv, mk_var(rec_arg), mk_var(result));
      Formula conj3;
      {
        std::vector<Term> slots = xs;
        slots.push_back(mk_var(w));
        slots.push_back(mk_var(y));
        slots.push_back(mk_var(z));
        Formula h_inst = remap_slots(hpart, slots);
        Formula pair = mk_and(
            mk_and(bt_instance(tu, tv, tw, mk_var(y)),
                   bt_instance(tu, tv, mk_add(tw, mk_numeral(1)), mk_var(z))),
            h_inst);
        Formula body = mk_implies(mk_less(tw, mk_var(rec_arg)),
                                  mk_exists(y, mk_exists(z, pair)));
        conj3 = mk_forall(w, body);
      }
      Formula all = mk_and(mk_and(conj1, conj2), conj3);
      return mk_exists(u, mk_exists(v, all));
    }
  }
  throw Error("bad PR function");
}

// -- witness-checked verification -------------------------------------------------

namespace {

bool match_exists(const Formula& f, VarIndex& v, Formula& body) {
  if (f->kind != FormulaNode::Kind::Not) return false;
  const Formula& g = f->f;
  if (g->kind != FormulaNode::Kind::ForAll || g->f->kind != FormulaNode::Kind::Not)
    return false;
  v = g->var;
  body = g->f->f;
  return true;
}

bool match_and(const Formula& f, Formula& a, Formula& b) {
  if (f->kind != FormulaNode::Kind::Not) return false;
  const Formula& g = f->f;
  if (g->kind != FormulaNode::Kind::Implies || g->g->kind != FormulaNode::Kind::Not)
    return false;
  a = g->f;
  b = g->g->f;
  return true;
}

[[noreturn]] void shape_error(const char* where) {
  throw Error(std::string("compiled formula lost its expected shape at ") + where);
}

// Walks the compiled formula alongside the function structure, recording for
// every quantifier the values it takes in the true computation at `args`:
// Rec binders get the sequence witness and trace entries, Comp binders the
// inner results.  The per-variable candidate lists keep the hinted sweeps
// tiny.
void plan_hints(const PRFn& f, const std::vector<BigNat>& args, const Formula& node,
                EvalHints& hints) {
  switch (f->kind) {
    case PRFnNode::Kind::Zero:
    case PRFnNode::Kind::Succ:
    case PRFnNode::Kind::Proj:
      return;
    case PRFnNode::Kind::Comp: {
      Formula cur = node;
      std::vector<VarIndex> ws;
      for (std::size_t m = 0; m < f->args.size(); m++) {
        VarIndex v;
        Formula body;
        if (!match_exists(cur, v, body)) shape_error("comp existential");
        ws.push_back(v);
        cur = body;
      }
      std::vector<BigNat> vals;
      for (const auto& g : f->args) vals.push_back(eval_pr(g, args));
      for (std::size_t m = 0; m < ws.size(); m++) hints.add(ws[m], Ordinal(vals[m]));
      // conjunction is left-assoc: ((H1 & H2) & ... ) & G
      std::vector<Formula> conjs;
      Formula walk = cur;
      for (std::size_t m = 0; m < f->args.size(); m++) {
        Formula a, b;
        if (!match_and(walk, a, b)) shape_error("comp conjunction");
        conjs.push_back(b);
        walk = a;
      }
      conjs.push_back(walk);
      // conjs is reversed: [G, Hm, ..., H1]
      plan_hints(f->f, vals, conjs.front(), hints);
      for (std::size_t m = 0; m < f->args.size(); m++)
        plan_hints(f->args[m], args, conjs[conjs.size() - 1 - m], hints);
      return;
    }
    case PRFnNode::Kind::Rec: {
      VarIndex u, v;
      Formula after_u, after_v;
      if (!match_exists(node, u, after_u)) shape_error("rec witness u");
      if (!match_exists(after_u, v, after_v)) shape_error("rec witness v");
      Formula c12, conj3, conj1, conj2;
      if (!match_and(after_v, c12, conj3)) shape_error("rec conjunction");
      if (!match_and(c12, conj1, conj2)) shape_error("rec conjunction");

      std::vector<BigNat> prefix(args.begin(), args.end() - 1);
      const BigNat& m = args.back();
      std::vector<BigNat> trace;
      for (BigNat i = 0; i <= m; i += 1) {
        std::vector<BigNat> a = prefix;
        a.push_back(i);
        trace.push_back(eval_pr(f, a));
      }
      BetaWitness wit = encode_sequence(trace);
      hints.add(u, Ordinal(wit.u));
      hints.add(v, Ordinal(wit.v));

      // conj1 = (Ew)(Bt & G)
      VarIndex w1;
      Formula c1body, bt0, gpart;
      if (!match_exists(conj1, w1, c1body)) shape_error("rec base existential");
      if (!match_and(c1body, bt0, gpart)) shape_error("rec base conjunction");
      hints.add(w1, Ordinal(trace[0]));
      plan_hints(f->f, prefix, gpart, hints);

      // conj3 = (Aw)((w < x_k) -> (Ey)(Ez)((Bt & Bt) & H))
      if (conj3->kind != FormulaNode::Kind::ForAll) shape_error("rec step quantifier");
      Formula impl = conj3->f;
      if (impl->kind != FormulaNode::Kind::Implies) shape_error("rec step guard");
      VarIndex y, z;
      Formula after_y, after_z, bts, hpart;
      if (!match_exists(impl->g, y, after_y)) shape_error("rec step y");
      if (!match_exists(after_y, z, after_z)) shape_error("rec step z");
      if (!match_and(after_z, bts, hpart)) shape_error("rec step conjunction");
      for (BigNat i = 0; i < m; i += 1) {
        std::size_t ii = static_cast<std::size_t>(i);
        hints.add(y, Ordinal(trace[ii]));
        hints.add(z, Ordinal(trace[ii + 1]));
        std::vector<BigNat> ha = prefix;
        ha.push_back(i);
        ha.push_back(trace[ii]);
        plan_hints(f->h, ha, hpart, hints);
      }
      return;
    }
  }
}

constexpr unsigned kRepEvalBound = 8;

// Instantiates the compiled formula's argument and result slots at numerals,
// stripping the outermost Rec witnesses (if any) to their encode_sequence
// values so that failure at a wrong result is decidable, and evaluates.
TruthValue eval_instantiated(const PRFn& f, const Formula& compiled,
                             const std::vector<BigNat>& args, const BigNat& result,
                             const EvalHints& hints) {
  Formula body = compiled;
  Bindings binds;
  if (f->kind == PRFnNode::Kind::Rec) {
    VarIndex u, v;
    Formula after_u, after_v;
    if (!match_exists(body, u, after_u) || !match_exists(after_u, v, after_v))
      shape_error("rec strip");
    std::vector<BigNat> prefix(args.begin(), args.end() - 1);
    std::vector<BigNat> trace;
    for (BigNat i = 0; i <= args.back(); i += 1) {
      std::vector<BigNat> a = prefix;
      a.push_back(i);
      trace.push_back(eval_pr(f, a));
    }
    BetaWitness wit = encode_sequence(trace);
    binds[u] = Ordinal(wit.u);
    binds[v] = Ordinal(wit.v);
    body = after_v;
  }
  for (std::size_t k = 0; k < args.size(); k++)
    binds[static_cast<VarIndex>(k + 1)] = Ordinal(args[k]);
  binds[static_cast<VarIndex>(args.size() + 1)] = Ordinal(result);
  return eval_formula(body, Model::Standard, binds, kRepEvalBound, hints);
}

}  // namespace

TruthValue representation_holds(const PRFn& f, const std::vector<BigNat>& args,
                                const BigNat& result) {
  if (args.size() != f->arity) throw Error("representation_holds: arity mismatch");
  Formula compiled = compile_representation(f);
  switch (f->kind) {
    case PRFnNode::Kind::Zero:
    case PRFnNode::Kind::Succ:
    case PRFnNode::Kind::Proj:
    case PRFnNode::Kind::Rec: {
      EvalHints hints;
      plan_hints(f, args, compiled, hints);
      return eval_instantiated(f, compiled, args, result, hints);
    }
    case PRFnNode::Kind::Comp: {
      // each inner function is verified at its computed value, the outer one
      // at the candidate result; existentials would otherwise hide a wrong
      // result behind an undecidable sweep
      std::vector<BigNat> vals;
      for (const auto& g : f->args) {
        BigNat w = eval_pr(g, args);
        TruthValue t = representation_holds(g, args, w);
        if (t != TruthValue::True) return t;
        vals.push_back(w);
      }
      return representation_holds(f->f, vals, result);
    }
  }
  throw Error("bad PR function");
}

bool check_representation(const PRFn& f, const std::vector<BigNat>& args) {
  BigNat value = eval_pr(f, args);
  if (representation_holds(f, args, value) != TruthValue::True) return false;
  for (BigNat z = 0; z <= value + 5; z += 1) {
    if (z == value) continue;
    if (representation_holds(f, args, z) != TruthValue::False) return false;
  }
  return true;
}

// -- metatheoretic predicates -------------------------------------------------------

bool prf_check(const GodelNumber& x, const GodelNumber& y, const SystemProfile& p) {
  if (x.codec() != y.codec()) throw CodecError("prf: codec mismatch");
  Encodable obj;
  try {
    obj = decode(x);
  } catch (const NotAnEncoding&) {
    return false;
  }
  const ProofScript* script = std::get_if<ProofScript>(&obj);
  if (!script || script->lines.empty()) return false;
  if (script->uses_hypotheses()) return false;
  if (!check_proof(*script, p).accepted) return false;
  return encode(script->lines.back().formula, x.codec()) == y;
}

namespace {

const Formula* decoded_formula(const Encodable& obj) {
  return std::get_if<Formula>(&obj);
}

bool proves_instance(const GodelNumber& y, const Formula& instance,
                     const SystemProfile& p) {
  Encodable proof_obj;
  try {
    proof_obj = decode(y);
  } catch (const NotAnEncoding&) {
    return false;
  }
  const ProofScript* proof = std::get_if<ProofScript>(&proof_obj);
  if (!proof || proof->lines.empty() || proof->uses_hypotheses()) return false;
  if (!check_proof(*proof, p).accepted) return false;
  return formula_equal(proof->lines.back().formula, instance);
}

}  // namespace

bool prf_prime_check(const GodelNumber& u, const GodelNumber& y,
                     const SystemProfile& p) {
  if (u.codec() != y.codec()) throw CodecError("prf': codec mismatch");
  Encodable obj;
  try {
    obj = decode(u);
  } catch (const NotAnEncoding&) {
    return false;
  }
  const Formula* f = decoded_formula(obj);
  if (!f) return false;
  if (!free_vars(*f).count(1)) return false;  // x1 must occur
  BigNat uval;
  try {
    uval = u.value();
  } catch (const ValueTooLarge&) {
    return false;  // the instance numeral could not even be written down
  }
  Formula instance = substitute(*f, 1, mk_numeral(uval));
  return proves_instance(y, instance, p);
}

bool q_check(const GodelNumber& x, const GodelNumber& y, const SystemProfile& p) {
  if (x.codec() != y.codec()) throw CodecError("q: codec mismatch");
  Encodable obj;
  try {
    obj = decode(x);
  } catch (const NotAnEncoding&) {
    return false;
  }
  const Formula* f = decoded_formula(obj);
  if (!f) return false;
  auto fv = free_vars(*f);
  if (fv.size() != 1) return false;
  BigNat xval;
  try {
    xval = x.value();
  } catch (const ValueTooLarge&) {
    return false;
  }
  Formula instance = substitute(*f, *fv.begin(), mk_numeral(xval));
  return proves_instance(y, instance, p);
}

// -- definitions file -----------------------------------------------------------

namespace {

struct PRParser {
  const std::string& text;
  std::size_t pos = 0;
  const std::map<std::string, PRFn>& defs;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) pos++;
  }

  char peek() { return pos < text.size() ? text[pos] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw Error(std::string("expected '") + c + "' in PR expression");
    pos++;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '-'))
      pos++;
    if (start == pos) throw Error("expected identifier in PR expression");
    return text.substr(start, pos - start);
  }

  unsigned number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      pos++;
    if (start == pos) throw Error("expected number in PR expression");
    unsigned long v = std::stoul(text.substr(start, pos - start));
    if (v > 1000) throw Error("PR arity out of range");
    return static_cast<unsigned>(v);
  }

  PRFn expr() {
    std::string name = ident();
    skip_ws();
    if (name == "zero") {
      expect('(');
      unsigned k = number();
      expect(')');
      return pr_zero(k);
    }
    if (name == "succ") return pr_succ();
    if (name == "proj") {
      expect('(');
      unsigned n = number();
      expect(',');
      unsigned i = number();
      expect(')');
      return pr_proj(n, i);
    }
    if (name == "comp") {
      expect('(');
      PRFn f = expr();
      std::vector<PRFn> args;
      skip_ws();
      while (peek() == ',') {
        pos++;
        args.push_back(expr());
        skip_ws();
      }
      expect(')');
      return pr_comp(std::move(f), std::move(args));
    }
    if (name == "rec") {
      expect('(');
      PRFn g = expr();
      expect(',');
      PRFn h = expr();
      expect(')');
      return pr_rec(std::move(g), std::move(h));
    }
    auto it = defs.find(name);
    if (it == defs.end()) throw Error("unknown PR function: " + name);
    return it->second;
  }
};

}  // namespace

std::map<std::string, PRFn> parse_pr_definitions(const std::string& text) {
  std::map<std::string, PRFn> defs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      bool blank = true;
      for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') blank = false;
      if (blank) continue;
      throw Error("PR definition line needs '=': " + line);
    }
    std::string name = line.substr(0, eq);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    while (!name.empty() && (name.front() == ' ' || name.front() == '\t'))
      name.erase(name.begin());
    if (name.empty()) throw Error("PR definition without a name");
    std::string body = line.substr(eq + 1);
    while (!body.empty() && body.back() == '\r') body.pop_back();
    PRParser p{body, 0, defs};
    PRFn f = p.expr();
    p.skip_ws();
    if (p.pos != body.size()) throw Error("trailing input in PR definition: " + line);
    defs[name] = std::move(f);
  }
  return defs;
}

std::map<std::string, PRFn> load_pr_definitions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open PR definitions: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pr_definitions(buf.str());
}

PRFn pr_add() {
  return pr_rec(pr_proj(1, 1), pr_comp(pr_succ(), {pr_proj(3, 3)}));
}

PRFn pr_mul() {
  return pr_rec(pr_zero(1), pr_comp(pr_add(), {pr_proj(3, 1), pr_proj(3, 3)}));
}

}  // namespace pacheck
