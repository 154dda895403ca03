// Proof scripts: indexed formula sequences with justifications, plus the
// text file format they are stored in.
//
// File format, one step per line:
//   <index> | <formula text> | <justification>
// justifications: axiom K1..A9, hyp, mp <i> <j>, gen <i> x<k>,
// ind-closed <i> <j>, ind-open <i> <j>, omega-num <i> <n>, omega-spec <path>.
// Header lines `@name:` / `@system:`; `#` starts a comment.

#ifndef PACHECK_SCRIPT_HPP
#define PACHECK_SCRIPT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pacheck/profile.hpp"
#include "pacheck/rope.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck {

struct Justification {
  enum class Kind {
    Axiom, Hyp, MP, Gen, IndClosed, IndOpen, OmegaNum, OmegaSpec,
  };
  Kind kind;
  AxiomTag tag{};           // Axiom
  std::int64_t i = 0;       // MP/Gen/IndClosed/IndOpen/OmegaNum first ref
  std::int64_t j = 0;       // MP/IndClosed/IndOpen second ref
  VarIndex var = 0;         // Gen
  BigNat n;                 // OmegaNum
  std::string cert_path;    // OmegaSpec

  std::string render() const;
};

struct ProofLine {
  std::int64_t index;
  Formula formula;
  Justification just;
};

struct ProofScript {
  std::string name;
  std::string system;  // profile name the file declares; may be empty
  std::vector<ProofLine> lines;

  bool uses_hypotheses() const;
};

bool script_equal(const ProofScript& a, const ProofScript& b);

Justification parse_justification(const std::string& text);

ProofScript parse_script(const Rope& text);
ProofScript parse_script(const std::string& text);
ProofScript load_script(const std::string& path);

}  // namespace pacheck

#endif
