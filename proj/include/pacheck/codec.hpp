// Godel numbering of terms, formulas and proof scripts.
//
// Two codecs behind one type.  Positional reads the canonical rendering as a
// bijective base-256 numeral (digit = byte + 1); PrimePower is the classical
// 2^c1 * 3^c2 * ... * p_n^cn over a fixed symbol-code table.  Either way the
// canonical rendering is the substrate, held as a Rope so that numbers whose
// decimal expansion could never be written down still encode, decode and
// compare exactly.  value() materializes the numeral and throws a ValueTooLarge
// error beyond a size guard.

#ifndef PACHECK_CODEC_HPP
#define PACHECK_CODEC_HPP

#include <variant>
#include <vector>

#include "pacheck/rope.hpp"
#include "pacheck/script.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck {

enum class Codec { Positional, PrimePower };

Codec parse_codec(const std::string& name);  // "positional" | "prime"
std::string codec_name(Codec c);

struct CodecError : Error {
  explicit CodecError(const std::string& msg) : Error(msg) {}
};
struct NotAnEncoding : CodecError {
  explicit NotAnEncoding(const std::string& msg) : CodecError(msg) {}
};
struct ValueTooLarge : CodecError {
  explicit ValueTooLarge(const std::string& msg) : CodecError(msg) {}
};

// Symbol codes for the PrimePower codec: 0->1, '->3, ~->5, "->"->7, (->9,
// )->11, =->13, +->15, *->17, A->19, space->21, x_i -> 2i.
struct SymbolRun {
  BigNat code;
  BigNat count;
  bool operator==(const SymbolRun&) const = default;
};

class GodelNumber;
using Encodable = std::variant<Term, Formula, ProofScript>;

class GodelNumber {
 public:
  // Positional content: the canonical rendering.
  static GodelNumber positional(Rope rendering);
  // PrimePower content for terms/formulas: symbol-code runs.
  static GodelNumber prime_symbols(std::vector<SymbolRun> codes);
  // PrimePower content for proof scripts: per-line exponents, each the
  // positional value of that line's canonical rendering.
  static GodelNumber prime_lines(std::vector<Rope> lines);

  Codec codec() const { return codec_; }

  // Exact numeral; throws ValueTooLarge past the guard.
  BigNat value(std::size_t limit = Rope::kDefaultFlatLimit) const;
  bool value_fits(std::size_t limit = Rope::kDefaultFlatLimit) const;
  std::string describe() const;  // decimal when it fits, else a size note

  bool operator==(const GodelNumber& other) const;

  const Rope& rendering() const;  // Positional only

  friend int gn_compare(const GodelNumber& a, const GodelNumber& b);
  friend Encodable decode(const GodelNumber& g);
  friend GodelNumber gn_from_value(Codec c, const BigNat& value);

 private:
  GodelNumber() = default;
  Codec codec_ = Codec::Positional;
  Rope bytes_;                            // Positional
  std::vector<SymbolRun> symbol_runs_;    // PrimePower, syntax objects
  std::vector<Rope> line_ropes_;          // PrimePower, proof scripts
  bool is_script_ = false;
};

GodelNumber encode(const Term& t, Codec c);
GodelNumber encode(const Formula& f, Codec c);
GodelNumber encode(const ProofScript& s, Codec c);

// Unique preimage of g; throws NotAnEncoding when no well-formed object exists.
Encodable decode(const GodelNumber& g);
// Rebuilds a GodelNumber from a raw numeral (CLI path; the value must fit).
GodelNumber gn_from_value(Codec c, const BigNat& value);

// Numeric ordering of values under the same codec; throws on codec mismatch.
// -1, 0, 1.
int gn_compare(const GodelNumber& a, const GodelNumber& b);

// Canonical rendering of a script: "@name:"/"@system:" header lines followed
// by "<index> | <formula> | <justification>" lines, newline-joined.
Rope render_script(const ProofScript& s);
std::vector<Rope> render_script_lines(const ProofScript& s);

}  // namespace pacheck

#endif
