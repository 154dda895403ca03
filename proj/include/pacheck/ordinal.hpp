// Cantor-normal-form ordinals below omega^omega.

#ifndef PACHECK_ORDINAL_HPP
#define PACHECK_ORDINAL_HPP

#include <string>
#include <vector>

#include "pacheck/bignat.hpp"

namespace pacheck {

struct OrdinalOverflow : Error {
  explicit OrdinalOverflow(const std::string& msg) : Error(msg) {}
};

// Sum of omega^exponent * coefficient terms, exponents strictly decreasing,
// coefficients >= 1.  Empty term list is 0; [(0, n)] is the finite ordinal n.
class Ordinal {
 public:
  struct Part {
    BigNat exponent;
    BigNat coefficient;
    bool operator==(const Part&) const = default;
  };

  Ordinal() = default;
  explicit Ordinal(const BigNat& finite);
  static Ordinal omega();
  static Ordinal from_parts(std::vector<Part> parts);  // validates CNF shape

  const std::vector<Part>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool is_finite() const;
  const BigNat& finite_value() const;  // requires is_finite()

  bool operator==(const Ordinal&) const = default;
  bool operator<(const Ordinal& other) const;
  bool operator<=(const Ordinal& other) const { return *this == other || *this < other; }

  std::string str() const;  // e.g. "w^2*3 + w + 5"

 private:
  std::vector<Part> parts_;
};

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
Ordinal ord_succ(const Ordinal& a);

// Parses "omega^2*3 + omega*2 + 5", "omega", "w+1", plain decimals.
Ordinal parse_ordinal(const std::string& text);

}  // namespace pacheck

#endif
