// The proof kernel: axiom-schema matching and line-by-line checking of proof
// scripts against a system profile, plus omega-Specification certificates.

#ifndef PACHECK_KERNEL_HPP
#define PACHECK_KERNEL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pacheck/codec.hpp"
#include "pacheck/profile.hpp"
#include "pacheck/script.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck {

// Fixed proper axioms A1..A9 (K-tags are schemas and have no fixed formula).
const Formula& axiom_formula(AxiomTag tag);

// K1..K3 match propositional shapes, K4/K5 match with their side conditions
// (t free for x_i; no free occurrence of x_i in the antecedent), A1..A9 match
// the fixed formulas exactly.
bool match_axiom(const Formula& f, AxiomTag tag);

struct Verdict {
  bool accepted;
  std::int64_t bad_line = 0;   // rejected: first offending line index
  std::string reason;          // rejected: why
  bool from_hypotheses = false;  // accepted: uses hyp lines
  bool sampled = false;          // accepted: rests on an omega-spec certificate

  static Verdict ok(bool hyp, bool sampled) { return {true, 0, "", hyp, sampled}; }
  static Verdict bad(std::int64_t line, std::string why) {
    return {false, line, std::move(why), false, false};
  }
};

struct CheckOptions {
  // Base directory for resolving omega-spec certificate paths.
  std::string cert_dir = ".";
  Codec codec = Codec::Positional;
};

Verdict check_proof(const ProofScript& s, const SystemProfile& p,
                    const CheckOptions& opts = {});

// -- omega-Specification certificates -----------------------------------------

struct OmegaSpecCertificate {
  Formula target;              // (A v)F
  std::string placeholder;     // token standing for the numeral, usually "?n"
  BigNat bound_k;              // strict Godel-number bound
  BigNat horizon;              // instances 0..horizon are sampled
  std::vector<std::string> template_lines;  // raw proof-script lines
  std::string name;
};

struct CertVerdict {
  enum class Kind { CertifiedUpTo, BoundViolatedAt, InvalidTemplateAt };
  Kind kind;
  BigNat n;  // horizon for Certified; offending instance otherwise
  std::string detail;

  bool certified() const { return kind == Kind::CertifiedUpTo; }
  std::string describe() const;
};

OmegaSpecCertificate parse_certificate(const std::string& text);
OmegaSpecCertificate load_certificate(const std::string& path);

// Instantiates the template at numeral(n); the placeholder stands for the
// numeral in formula fields and for the decimal in justification fields.
ProofScript instantiate_template(const OmegaSpecCertificate& c, const BigNat& n);

// For each n in 0..horizon: check the instantiated template under p with
// OMEGA-SPEC removed, confirm the last line is F[v := numeral(n)], and require
// its Godel number < bound_k.  A certified verdict licenses the target only as
// sampled evidence, never as a totality proof.
CertVerdict check_certificate(const OmegaSpecCertificate& c, const SystemProfile& p,
                              Codec codec = Codec::Positional);

}  // namespace pacheck

#endif
