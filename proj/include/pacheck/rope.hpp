// Run-length-encoded byte strings.
//
// Canonical renderings of formulas that mention large numerals contain runs of
// successor marks far too long to materialize (a numeral for a Godel number in
// the 10^20 range has that many apostrophes).  A Rope stores such text as
// (byte, count) runs with arbitrary-precision counts, so rendering, equality,
// ordering and bijective base-256 evaluation all stay cheap for objects whose
// flat length is astronomical.

#ifndef PACHECK_ROPE_HPP
#define PACHECK_ROPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pacheck/bignat.hpp"

namespace pacheck {

class Rope {
 public:
  struct Run {
    uint8_t byte;
    BigNat count;
    bool operator==(const Run&) const = default;
  };

  Rope() = default;
  explicit Rope(const std::string& s) { append(s); }

  void append(uint8_t byte, const BigNat& count = 1);
  void append(const std::string& s);
  void append(const Rope& other);

  const std::vector<Run>& runs() const { return runs_; }
  const BigNat& size() const { return size_; }
  bool empty() const { return runs_.empty(); }

  bool operator==(const Rope& other) const {
    return size_ == other.size_ && runs_ == other.runs_;
  }

  // Lexicographic byte order (for equal lengths); callers wanting numeric
  // order under bijective numeration compare sizes first.
  int lex_compare(const Rope& other) const;

  // Materializes the flat byte string.  Throws when the rope is longer than
  // max_len (guards against astronomically long renderings).
  std::string to_string(std::size_t max_len = kDefaultFlatLimit) const;

  // Value of the rope's bytes read as a bijective base-256 numeral
  // (digit = byte + 1).  Empty rope is 0.  Throws past max_len.
  BigNat to_value(std::size_t max_len = kDefaultFlatLimit) const;
  static Rope from_value(const BigNat& value);

  static constexpr std::size_t kDefaultFlatLimit = 1 << 21;

 private:
  std::vector<Run> runs_;
  BigNat size_ = 0;
};

}  // namespace pacheck

#endif
