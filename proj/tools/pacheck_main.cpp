// pacheck: proof checking, Godel numbering, Beta sequences, representation
// compilation, diagonalization and bounded model evaluation for the eight
// arithmetic systems, from one command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pacheck/batch.hpp"
#include "pacheck/beta.hpp"
#include "pacheck/codec.hpp"
#include "pacheck/diagonal.hpp"
#include "pacheck/eval.hpp"
#include "pacheck/kernel.hpp"
#include "pacheck/primrec.hpp"

using namespace pacheck;

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

bool g_porcelain = false;

void result_line(const std::string& subcmd, const std::string& verdict,
                 const std::string& detail) {
  if (g_porcelain)
    std::cout << "RESULT " << subcmd << " " << verdict << " "
              << (detail.empty() ? "-" : detail) << "\n";
}

Codec codec_from(const std::string& flag) {
  if (!flag.empty()) return parse_codec(flag);
  const char* env = std::getenv("PACHECK_CODEC");
  if (env && *env) return parse_codec(env);
  return Codec::Positional;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<BigNat> parse_csv_naturals(const std::string& csv) {
  std::vector<BigNat> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(from_decimal(item));
  return out;
}

Bindings parse_bindings(const std::string& spec) {
  Bindings out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || item.size() < 3 || item[0] != 'x')
      throw Error("bad binding (want xN=value): " + item);
    std::string var = item.substr(1, eq - 1);
    out[static_cast<VarIndex>(std::stol(var))] = parse_ordinal(item.substr(eq + 1));
  }
  return out;
}

int cmd_check(const std::string& path, const std::string& system, Codec codec) {
  ProofScript s = load_script(path);
  std::string sys = system.empty() ? s.system : system;
  if (sys.empty()) throw Error("no --system given and the script declares none");
  CheckOptions opts;
  opts.cert_dir = std::filesystem::path(path).parent_path().string();
  if (opts.cert_dir.empty()) opts.cert_dir = ".";
  opts.codec = codec;
  Verdict v = check_proof(s, system_profile(sys), opts);
  if (v.accepted) {
    std::string notes;
    if (v.from_hypotheses) notes += " (from hypotheses)";
    if (v.sampled) notes += " (sampled, not a totality proof)";
    std::cout << "ACCEPTED" << notes << "\n";
    result_line("check", "ACCEPTED", notes.empty() ? "" : notes.substr(1));
    return kExitAccepted;
  }
  std::string detail = "line " + std::to_string(v.bad_line) + ": " + v.reason;
  std::cout << "REJECTED " << detail << "\n";
  result_line("check", "REJECTED", detail);
  return kExitRejected;
}

int cmd_encode(const std::string& path, const std::string& formula_text,
               const std::string& term_text, Codec codec) {
  GodelNumber gn = [&] {
    if (!formula_text.empty()) return encode(parse_formula(formula_text), codec);
    if (!term_text.empty()) return encode(parse_term(term_text), codec);
    if (path.empty()) throw Error("encode needs a file, --formula or --term");
    std::string text = read_file(path);
    if (text.find('|') != std::string::npos || text.find('@') != std::string::npos)
      return encode(parse_script(text), codec);
    std::string trimmed;
    for (char c : text)
      if (c != '\n' && c != '\r') trimmed += c;
    try {
      return encode(parse_formula(trimmed), codec);
    } catch (const Error&) {
      return encode(parse_term(trimmed), codec);
    }
  }();
  if (!gn.value_fits())
    throw Error("Godel number too large to print in decimal: " + gn.describe());
  std::cout << to_decimal(gn.value()) << "\n";
  result_line("encode", "OK", to_decimal(gn.value()));
  return kExitAccepted;
}

int cmd_decode(const std::string& decimal, Codec codec) {
  GodelNumber gn = gn_from_value(codec, from_decimal(decimal));
  Encodable obj = decode(gn);
  if (const Term* t = std::get_if<Term>(&obj)) {
    std::cout << "term: " << print_term(*t) << "\n";
    result_line("decode", "OK", print_term(*t));
  } else if (const Formula* f = std::get_if<Formula>(&obj)) {
    std::cout << "formula: " << print_formula(*f) << "\n";
    result_line("decode", "OK", print_formula(*f));
  } else {
    const ProofScript& s = std::get<ProofScript>(obj);
    std::cout << "proof script (" << s.lines.size() << " lines):\n"
              << render_script(s).to_string() << "\n";
    result_line("decode", "OK", "proof script");
  }
  return kExitAccepted;
}

int cmd_beta_encode(const std::string& csv) {
  BetaWitness w = encode_sequence(parse_csv_naturals(csv));
  std::cout << "u=" << w.u << " v=" << w.v << "\n";
  result_line("beta", "OK", "u=" + to_decimal(w.u) + " v=" + to_decimal(w.v));
  return kExitAccepted;
}

int cmd_beta_eval(const std::string& u, const std::string& v, const std::string& i) {
  BigNat val = beta(from_decimal(u), from_decimal(v), from_decimal(i));
  std::cout << val << "\n";
  result_line("beta", "OK", to_decimal(val));
  return kExitAccepted;
}

int cmd_compile_pr(const std::string& path, const std::string& name,
                   const std::string& eval_csv, const std::string& check_csv) {
  auto defs = load_pr_definitions(path);
  auto it = defs.find(name);
  if (it == defs.end()) throw Error("no definition named " + name + " in " + path);
  const PRFn& f = it->second;
  std::cout << print_formula_abbrev(compile_representation(f)) << "\n";
  result_line("compile-pr", "OK", name);
  if (!eval_csv.empty()) {
    BigNat v = eval_pr(f, parse_csv_naturals(eval_csv));
    std::cout << name << "(" << eval_csv << ") = " << v << "\n";
  }
  if (!check_csv.empty()) {
    bool ok = check_representation(f, parse_csv_naturals(check_csv));
    std::cout << "representation check at (" << check_csv << "): "
              << (ok ? "true" : "false") << "\n";
    return ok ? kExitAccepted : kExitRejected;
  }
  return kExitAccepted;
}

int cmd_prf(const std::string& x, const std::string& y, const std::string& system,
            bool prime_variant, Codec codec) {
  GodelNumber gx = gn_from_value(codec, from_decimal(x));
  GodelNumber gy = gn_from_value(codec, from_decimal(y));
  const SystemProfile& p = system_profile(system);
  bool ok = prime_variant ? prf_prime_check(gx, gy, p) : prf_check(gx, gy, p);
  std::cout << (ok ? "true" : "false") << "\n";
  result_line(prime_variant ? "prf-prime" : "prf", ok ? "TRUE" : "FALSE", "");
  return ok ? kExitAccepted : kExitRejected;
}

int cmd_q(const std::string& x, const std::string& y, const std::string& system,
          Codec codec) {
  GodelNumber gx = gn_from_value(codec, from_decimal(x));
  GodelNumber gy = gn_from_value(codec, from_decimal(y));
  bool ok = q_check(gx, gy, system_profile(system));
  std::cout << (ok ? "true" : "false") << "\n";
  result_line("q", ok ? "TRUE" : "FALSE", "");
  return ok ? kExitAccepted : kExitRejected;
}

int cmd_diag(const std::string& mode, const std::string& formula_path, Codec codec) {
  Formula w = parse_formula(read_file(formula_path));
  if (mode != "goedel" && mode != "anand")
    throw Error("diag mode must be goedel or anand");
  DiagonalResult r =
      mode == "goedel" ? goedel_sentence(w, codec) : anand_fixedpoint(w, codec);
  std::cout << "fixed_gn: " << r.fixed_gn.describe() << "\n";
  std::cout << "sentence: " << print_formula_abbrev(r.sentence, 60) << "\n";
  result_line("diag", "OK", r.fixed_gn.describe());
  return kExitAccepted;
}

int cmd_eval(const std::string& model_name, unsigned bound, const std::string& binds,
             const std::string& formula_text) {
  Model model;
  if (model_name == "standard")
    model = Model::Standard;
  else if (model_name == "ca")
    model = Model::CA;
  else
    throw Error("model must be standard or ca");
  TruthValue t =
      eval_formula(parse_formula(formula_text), model, parse_bindings(binds), bound);
  std::cout << truth_name(t) << "\n";
  result_line("eval", truth_name(t), "");
  switch (t) {
    case TruthValue::True: return kExitAccepted;
    case TruthValue::False: return kExitRejected;
    case TruthValue::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int cmd_systems() {
  for (const std::string& name : profile_names()) {
    const SystemProfile& p = system_profile(name);
    std::cout << name << ":\n  axioms:";
    for (AxiomTag t : p.axioms) std::cout << " " << axiom_tag_name(t);
    std::cout << "\n  induction:";
    if (p.induction.empty()) std::cout << " none";
    if (p.has(Induction::Closed)) std::cout << " IND-CLOSED";
    if (p.has(Induction::Open)) std::cout << " IND-OPEN";
    std::cout << "\n  rules:";
    for (Rule r : p.rules) std::cout << " " << rule_name(r);
    std::cout << "\n";
  }
  result_line("systems", "OK", "");
  return kExitAccepted;
}

int cmd_corpus(const std::string& dir, const std::string& expected_path, bool serial) {
  auto corpus = load_corpus(dir);
  auto rows = serial ? check_corpus_serial(corpus, dir) : check_corpus_omp(corpus, dir);
  std::string matrix = format_matrix(rows);
  std::cout << matrix;
  auto violations = monotonicity_violations(rows);
  for (const auto& v : violations)
    std::cout << "MONOTONICITY VIOLATION: " << v.script << " accepted under "
              << v.smaller << " but rejected under " << v.larger << "\n";
  std::string expected_file =
      expected_path.empty() ? dir + "/expected-matrix.txt" : expected_path;
  std::string expected;
  {
    std::ifstream in(expected_file, std::ios::binary);
    if (!in) throw Error("cannot open expected matrix: " + expected_file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '#') continue;
      expected += line + "\n";
    }
  }
  bool match = expected == matrix;
  if (!match) std::cout << "MATRIX MISMATCH against " << expected_file << "\n";
  bool ok = match && violations.empty();
  result_line("corpus", ok ? "OK" : "FAIL",
              match ? (violations.empty() ? "" : "monotonicity") : "matrix mismatch");
  return ok ? kExitAccepted : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for eight systems of first-order arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string codec_flag;
  app.add_option("--codec", codec_flag, "positional|prime (or PACHECK_CODEC)");
  app.add_flag("--porcelain", g_porcelain, "stable machine-readable RESULT lines");

  std::string check_path, check_system;
  auto* check = app.add_subcommand("check", "check a proof script against a profile");
  check->add_option("script", check_path)->required();
  check->add_option("--system", check_system, "profile name (default: script header)");

  std::string enc_path, enc_formula, enc_term;
  auto* enc = app.add_subcommand("encode", "Godel-encode a file, formula or term");
  enc->add_option("file", enc_path);
  enc->add_option("--formula", enc_formula);
  enc->add_option("--term", enc_term);

  std::string dec_value;
  auto* dec = app.add_subcommand("decode", "decode a Godel number");
  dec->add_option("value", dec_value)->required();

  auto* beta_cmd = app.add_subcommand("beta", "Beta-function sequence encoding");
  std::string beta_seq;
  auto* beta_enc = beta_cmd->add_subcommand("encode", "witness for a sequence");
  beta_enc->add_option("sequence", beta_seq, "comma-separated naturals")->required();
  std::string bu, bv, bi;
  auto* beta_ev = beta_cmd->add_subcommand("eval", "beta(u, v, i)");
  beta_ev->add_option("u", bu)->required();
  beta_ev->add_option("v", bv)->required();
  beta_ev->add_option("i", bi)->required();
  beta_cmd->require_subcommand(1);

  std::string pr_path, pr_name, pr_eval, pr_check;
  auto* pr = app.add_subcommand("compile-pr", "compile a PR function's representation");
  pr->add_option("file", pr_path)->required();
  pr->add_option("name", pr_name)->required();
  pr->add_option("--eval", pr_eval, "evaluate at comma-separated arguments");
  pr->add_option("--check", pr_check, "witness-check the representation there");

  std::string prf_x, prf_y, prf_system;
  bool prf_prime = false;
  auto* prf = app.add_subcommand("prf", "prf(x, y): x codes a proof of the formula coded by y");
  prf->add_option("x", prf_x)->required();
  prf->add_option("y", prf_y)->required();
  prf->add_option("--system", prf_system)->required();
  prf->add_flag("--prime", prf_prime, "prf'(u, y): proof of F(u) for F coded by u");

  std::string q_x, q_y, q_system;
  auto* qc = app.add_subcommand("q", "q(x, y): y codes a proof of K(x) for K coded by x");
  qc->add_option("x", q_x)->required();
  qc->add_option("y", q_y)->required();
  qc->add_option("--system", q_system)->required();

  std::string diag_mode, diag_formula;
  auto* diag = app.add_subcommand("diag", "fixed-point sentence construction");
  diag->add_option("--mode", diag_mode, "goedel|anand")->required();
  diag->add_option("--formula", diag_formula, "file with W(x1, x2)")->required();

  std::string eval_model = "standard", eval_binds, eval_formula_text;
  unsigned eval_bound = 16;
  auto* ev = app.add_subcommand("eval", "bounded three-valued evaluation");
  ev->add_option("--model", eval_model, "standard|ca");
  ev->add_option("--bound", eval_bound, "quantifier sweep bound");
  ev->add_option("--bind", eval_binds, "x1=omega,x2=3,...");
  ev->add_option("formula", eval_formula_text)->required();

  auto* sys = app.add_subcommand("systems", "list the eight system profiles");

  std::string corpus_dir = "corpus", corpus_expected;
  bool corpus_serial = false;
  auto* corp = app.add_subcommand("corpus", "acceptance matrix over the script corpus");
  corp->add_option("--dir", corpus_dir);
  corp->add_option("--expected", corpus_expected, "expected matrix file");
  corp->add_flag("--serial", corpus_serial, "serial reference instead of OpenMP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    Codec codec = codec_from(codec_flag);
    if (check->parsed()) return cmd_check(check_path, check_system, codec);
    if (enc->parsed()) return cmd_encode(enc_path, enc_formula, enc_term, codec);
    if (dec->parsed()) return cmd_decode(dec_value, codec);
    if (beta_cmd->parsed()) {
      if (beta_enc->parsed()) return cmd_beta_encode(beta_seq);
      return cmd_beta_eval(bu, bv, bi);
    }
    if (pr->parsed()) return cmd_compile_pr(pr_path, pr_name, pr_eval, pr_check);
    if (prf->parsed()) return cmd_prf(prf_x, prf_y, prf_system, prf_prime, codec);
    if (qc->parsed()) return cmd_q(q_x, q_y, q_system, codec);
    if (diag->parsed()) return cmd_diag(diag_mode, diag_formula, codec);
    if (ev->parsed())
      return cmd_eval(eval_model, eval_bound, eval_binds, eval_formula_text);
    if (sys->parsed()) return cmd_systems();
    if (corp->parsed()) return cmd_corpus(corpus_dir, corpus_expected, corpus_serial);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
