#include "doctest.h"
#include "pacheck/batch.hpp"
#include "pacheck/kernel.hpp"

using namespace pacheck;

namespace {
const char* kCorpusDir = PACHECK_CORPUS_DIR;
}

TEST_SUITE("kernel") {

TEST_CASE("the eight profiles carry the fixed rule sets") {
  CHECK(profile_names().size() == 8);
  const auto& weak_ga = system_profile("weak-GA");
  CHECK(weak_ga.rules == std::set<Rule>{Rule::MP});
  CHECK(weak_ga.induction.empty());
  CHECK(weak_ga.axioms.size() == 14);
  CHECK(system_profile("strong-GA").rules == std::set<Rule>{Rule::MP, Rule::GEN});
  CHECK(system_profile("weak-PA").induction == std::set<Induction>{Induction::Closed});
  CHECK(system_profile("weak-PA").rules == std::set<Rule>{Rule::MP});
  CHECK(system_profile("PA").rules == std::set<Rule>{Rule::MP, Rule::GEN});
  CHECK(system_profile("omega-GA").rules ==
        std::set<Rule>{Rule::MP, Rule::OMEGA_NUM});
  CHECK(system_profile("omega-GA").induction.empty());
  CHECK(system_profile("omega-PA").induction == std::set<Induction>{Induction::Open});
  CHECK(system_profile("omega1-PA").induction ==
        std::set<Induction>{Induction::Closed, Induction::Open});
  CHECK(system_profile("omega2-PA").rules ==
        std::set<Rule>{Rule::MP, Rule::OMEGA_NUM, Rule::OMEGA_SPEC});
  CHECK_THROWS_AS(system_profile("nonesuch"), Error);
}

TEST_CASE("A-axioms match their fixed formulas only") {
  Formula a5 = parse_formula("((x1 + 0) = x1)");
  CHECK(match_axiom(a5, AxiomTag::A5));
  for (AxiomTag t : {AxiomTag::A1, AxiomTag::A2, AxiomTag::A3, AxiomTag::A4,
                     AxiomTag::A6, AxiomTag::A7, AxiomTag::A8, AxiomTag::A9})
    CHECK_FALSE(match_axiom(a5, t));
  // an instance at another term is not the axiom
  CHECK_FALSE(match_axiom(parse_formula("((0' + 0) = 0')"), AxiomTag::A5));
}

TEST_CASE("K1 matches its shape") {
  CHECK(match_axiom(parse_formula("((x1 = x1) -> ((0 = 0) -> (x1 = x1)))"),
                    AxiomTag::K1));
  CHECK_FALSE(match_axiom(parse_formula("((x1 = x1) -> ((0 = 0) -> (0 = 0)))"),
                          AxiomTag::K1));
}

TEST_CASE("K4 finds the substituted term and enforces free-for") {
  CHECK(match_axiom(parse_formula("((A x1)(x1 = 0) -> (x2' = 0))"), AxiomTag::K4));
  // t = x1 (identity instance)
  CHECK(match_axiom(parse_formula("((A x1)(x1 = 0) -> (x1 = 0))"), AxiomTag::K4));
  // no free occurrence: consequent must equal the body
  CHECK(match_axiom(parse_formula("((A x1)(0 = 0) -> (0 = 0))"), AxiomTag::K4));
  // inconsistent substitution
  CHECK_FALSE(
      match_axiom(parse_formula("((A x1)(x1 = x1) -> (0 = 0'))"), AxiomTag::K4));
  // capture: t = x2 is not free for x1 under (A x2)
  CHECK_FALSE(match_axiom(
      parse_formula("((A x1)~(A x2)(x1 = x2) -> ~(A x2)(x2 = x2))"), AxiomTag::K4));
}

TEST_CASE("K5 requires no free occurrence of the quantified variable") {
  CHECK(match_axiom(
      parse_formula("((A x1)((0 = 0) -> (x1 = x1)) -> ((0 = 0) -> (A x1)(x1 = x1)))"),
      AxiomTag::K5));
  // antecedent (x1 = 0) has x1 free
  CHECK_FALSE(match_axiom(
      parse_formula("((A x1)((x1 = 0) -> (x1 = x1)) -> ((x1 = 0) -> (A x1)(x1 = x1)))"),
      AxiomTag::K5));
}

TEST_CASE("the closed-implies-open replay is PA-only") {
  ProofScript s = load_script(std::string(kCorpusDir) + "/closed-implies-open.prf");
  CHECK(check_proof(s, system_profile("PA")).accepted);
  Verdict v = check_proof(s, system_profile("omega-PA"));
  CHECK_FALSE(v.accepted);
  CHECK(v.bad_line == 2);
  CHECK(v.reason == "rule GEN not in profile");
  CHECK_FALSE(check_proof(s, system_profile("omega1-PA")).accepted);
  CHECK_FALSE(check_proof(s, system_profile("strong-GA")).accepted);
}

TEST_CASE("gen-final script accepted exactly where GEN lives") {
  ProofScript s = load_script(std::string(kCorpusDir) + "/gen-a5.prf");
  for (const std::string& name : profile_names()) {
    bool expect = name == "strong-GA" || name == "PA";
    CHECK(check_proof(s, system_profile(name)).accepted == expect);
  }
}

TEST_CASE("hypotheses flag the verdict") {
  ProofScript s = load_script(std::string(kCorpusDir) + "/hyp-conditional.prf");
  Verdict v = check_proof(s, system_profile("weak-GA"));
  CHECK(v.accepted);
  CHECK(v.from_hypotheses);
}

TEST_CASE("broken references and wrong rule applications reject") {
  ProofScript s = parse_script(
      "1 | ((x1 + 0) = x1) | axiom A5\n"
      "2 | (0 = 0) | mp 1 7\n");
  Verdict v = check_proof(s, system_profile("PA"));
  CHECK_FALSE(v.accepted);
  CHECK(v.bad_line == 2);
  CHECK(v.reason.find("missing line") != std::string::npos);

  ProofScript bad_mp = parse_script(
      "1 | ((x1 + 0) = x1) | axiom A5\n"
      "2 | ((x1 + 0) = x1) | axiom A5\n"
      "3 | (0 = 0) | mp 1 2\n");
  CHECK_FALSE(check_proof(bad_mp, system_profile("PA")).accepted);
}

TEST_CASE("omega-num substitutes a numeral for a free variable") {
  ProofScript s = parse_script(
      "1 | ((x1 + 0) = x1) | axiom A5\n"
      "2 | ((0''''' + 0) = 0''''') | omega-num 1 5\n");
  CHECK(check_proof(s, system_profile("omega-GA")).accepted);
  CHECK_FALSE(check_proof(s, system_profile("PA")).accepted);
  // no free variable to instantiate
  ProofScript closed = parse_script(
      "1 | (0 = 0) | hyp\n"
      "2 | (0 = 0) | omega-num 1 3\n");
  Verdict v = check_proof(closed, system_profile("omega-GA"));
  CHECK_FALSE(v.accepted);
  CHECK(v.reason.find("free variable") != std::string::npos);
}

TEST_CASE("mutating any non-axiom line of an accepted script rejects it") {
  auto corpus = load_corpus(kCorpusDir);
  Formula poison = parse_formula("(0 = 0')");
  for (const auto& entry : corpus) {
    for (const std::string& name : profile_names()) {
      const SystemProfile& p = system_profile(name);
      CheckOptions opts;
      opts.cert_dir = kCorpusDir;
      if (!check_proof(entry.script, p, opts).accepted) continue;
      for (std::size_t k = 0; k < entry.script.lines.size(); k++) {
        // hyp lines accept any formula by design
        if (entry.script.lines[k].just.kind == Justification::Kind::Hyp) continue;
        ProofScript mutated = entry.script;
        mutated.lines[k].formula = poison;
        CHECK_FALSE(check_proof(mutated, p, opts).accepted);
      }
    }
  }
}

TEST_CASE("corpus matches the committed matrix and the lattice is monotone") {
  auto corpus = load_corpus(kCorpusDir);
  CHECK(corpus.size() >= 12);
  auto rows = check_corpus_serial(corpus, kCorpusDir);
  auto rows_omp = check_corpus_omp(corpus, kCorpusDir);
  for (std::size_t i = 0; i < rows.size(); i++)
    for (std::size_t p = 0; p < rows[i].verdicts.size(); p++)
      CHECK(rows[i].verdicts[p].accepted == rows_omp[i].verdicts[p].accepted);
  CHECK(monotonicity_violations(rows).empty());
}

TEST_CASE("certificate with horizon 0 certifies on a single sample") {
  OmegaSpecCertificate c;
  c.target = parse_formula("(A x1)((x1 + 0) = x1)");
  c.placeholder = "?n";
  c.horizon = 0;
  c.bound_k = BigNat("1000000000000000000000000000000000000000000000000000000000000"
                     "00000000000000000000000000000000000000000000000000000000");
  c.template_lines = {"1 | ((x1 + 0) = x1) | axiom A5",
                      "2 | ((?n + 0) = ?n) | omega-num 1 ?n"};
  CertVerdict v = check_certificate(c, system_profile("omega2-PA"));
  CHECK(v.kind == CertVerdict::Kind::CertifiedUpTo);
  CHECK(v.n == 0);
}

TEST_CASE("a tight bound is violated at n = 1 because proof numbers grow") {
  OmegaSpecCertificate c;
  c.target = parse_formula("(A x1)((x1 + 0) = x1)");
  c.placeholder = "?n";
  c.horizon = 5;
  c.bound_k = 1;
  c.template_lines = {"1 | ((x1 + 0) = x1) | axiom A5",
                      "2 | ((?n + 0) = ?n) | omega-num 1 ?n"};
  c.bound_k = encode(instantiate_template(c, 0), Codec::Positional).value() + 1;
  CertVerdict v = check_certificate(c, system_profile("omega2-PA"));
  CHECK(v.kind == CertVerdict::Kind::BoundViolatedAt);
  CHECK(v.n == 1);
}

TEST_CASE("a template broken at one instance reports InvalidTemplateAt") {
  OmegaSpecCertificate c;
  c.target = parse_formula("(A x1)((x1 + 0) = x1)");
  c.placeholder = "?n";
  c.horizon = 4;
  c.bound_k = big_pow(10, 400);
  // the second line hardcodes n = 0, so every instance with n >= 1 fails
  c.template_lines = {"1 | ((x1 + 0) = x1) | axiom A5",
                      "2 | ((0 + 0) = 0) | omega-num 1 ?n"};
  CertVerdict v = check_certificate(c, system_profile("omega2-PA"));
  CHECK(v.kind == CertVerdict::Kind::InvalidTemplateAt);
  CHECK(v.n == 1);
}

TEST_CASE("certificates may not nest omega-spec") {
  OmegaSpecCertificate c;
  c.target = parse_formula("(A x1)((x1 + 0) = x1)");
  c.placeholder = "?n";
  c.horizon = 1;
  c.bound_k = big_pow(10, 400);
  c.template_lines = {"1 | (A x1)((x1 + 0) = x1) | omega-spec cert-addzero.cert",
                      "2 | ((?n + 0) = ?n) | omega-num 1 ?n"};
  CertVerdict v = check_certificate(c, system_profile("omega2-PA"));
  CHECK(v.kind == CertVerdict::Kind::InvalidTemplateAt);
  CHECK(v.detail.find("OMEGA-SPEC") != std::string::npos);
}

TEST_CASE("check_proof is deterministic") {
  ProofScript s = load_script(std::string(kCorpusDir) + "/reflexivity-at-3.prf");
  Verdict a = check_proof(s, system_profile("strong-GA"));
  Verdict b = check_proof(s, system_profile("strong-GA"));
  CHECK(a.accepted == b.accepted);
  CHECK(a.bad_line == b.bad_line);
  CHECK(a.reason == b.reason);
}

}
