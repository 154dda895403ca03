#include "pacheck/ordinal.hpp"

#include <sstream>

namespace pacheck {

namespace {
// Exponents live below omega, but cap them so runaway arithmetic surfaces as
// an explicit overflow instead of unbounded growth.
const BigNat kMaxExponent = BigNat(1) << 62;
}  // namespace

Ordinal::Ordinal(const BigNat& finite) {
  if (finite < 0) throw Error("ordinal: negative");
  if (finite > 0) parts_.push_back(Part{0, finite});
}

Ordinal Ordinal::omega() {
  Ordinal o;
  o.parts_.push_back(Part{1, 1});
  return o;
}

Ordinal Ordinal::from_parts(std::vector<Part> parts) {
  for (std::size_t i = 0; i < parts.size(); i++) {
    if (parts[i].coefficient < 1) throw Error("ordinal: coefficient must be >= 1");
    if (parts[i].exponent < 0) throw Error("ordinal: negative exponent");
    if (i > 0 && parts[i].exponent >= parts[i - 1].exponent)
      throw Error("ordinal: exponents must strictly decrease");
  }
  Ordinal o;
  o.parts_ = std::move(parts);
  return o;
}

bool Ordinal::is_finite() const {
  return parts_.empty() || (parts_.size() == 1 && parts_[0].exponent == 0);
}

const BigNat& Ordinal::finite_value() const {
  static const BigNat zero = 0;
  if (parts_.empty()) return zero;
  if (!is_finite()) throw Error("ordinal is not finite");
  return parts_[0].coefficient;
}

bool Ordinal::operator<(const Ordinal& other) const {
  for (std::size_t i = 0; i < parts_.size() && i < other.parts_.size(); i++) {
    if (parts_[i].exponent != other.parts_[i].exponent)
      return parts_[i].exponent < other.parts_[i].exponent;
    if (parts_[i].coefficient != other.parts_[i].coefficient)
      return parts_[i].coefficient < other.parts_[i].coefficient;
  }
  return parts_.size() < other.parts_.size();
}

std::string Ordinal::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Part& p : parts_) {
    if (!first) os << " + ";
    first = false;
    if (p.exponent == 0) {
      os << p.coefficient;
    } else {
      os << "w";
      if (p.exponent != 1) os << "^" << p.exponent;
      if (p.coefficient != 1) os << "*" << p.coefficient;
    }
  }
  return os.str();
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const BigNat& lead = b.parts().front().exponent;
  std::vector<Ordinal::Part> out;
  // a's terms with exponent above b's lead survive; lower ones are absorbed
  for (const auto& p : a.parts()) {
    if (p.exponent > lead)
      out.push_back(p);
    else
      break;
  }
  std::vector<Ordinal::Part> rest = b.parts();
  std::size_t kept = out.size();
  if (kept < a.parts().size() && a.parts()[kept].exponent == lead) {
    rest[0].coefficient += a.parts()[kept].coefficient;
  }
  for (const auto& p : rest) out.push_back(p);
  return Ordinal::from_parts(std::move(out));
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  const BigNat& lead_exp = a.parts().front().exponent;
  for (const auto& q : b.parts()) {
    if (q.exponent > 0) {
      // a * w^e * c = w^(lead(a) + e) * c
      BigNat e = lead_exp + q.exponent;
      if (e > kMaxExponent)
        throw OrdinalOverflow("product escapes the supported range below omega^omega");
      acc = ord_add(acc, Ordinal::from_parts({{e, q.coefficient}}));
    } else {
      // a * n = w^lead * (c_lead * n) + tail(a)
      std::vector<Ordinal::Part> parts = a.parts();
      parts[0].coefficient *= q.coefficient;
      acc = ord_add(acc, Ordinal::from_parts(std::move(parts)));
    }
  }
  return acc;
}

Ordinal ord_succ(const Ordinal& a) { return ord_add(a, Ordinal(1)); }

Ordinal parse_ordinal(const std::string& text) {
  // terms separated by '+'; each: decimal | (omega|w)[^E][*C]
  Ordinal result;
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw Error("empty ordinal literal");
  std::size_t pos = 0;
  auto read_number = [&]() -> BigNat {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') pos++;
    if (start == pos) throw Error("expected number in ordinal literal: " + text);
    return from_decimal(s.substr(start, pos - start));
  };
  bool first = true;
  while (pos < s.size() || first) {
    if (!first) {
      if (s[pos] != '+') throw Error("expected '+' in ordinal literal: " + text);
      pos++;
    }
    first = false;
    BigNat exp = 0, coeff = 0;
    if (s.compare(pos, 5, "omega") == 0 || s[pos] == 'w') {
      pos += s.compare(pos, 5, "omega") == 0 ? 5 : 1;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        pos++;
        exp = read_number();
      }
      coeff = 1;
      if (pos < s.size() && s[pos] == '*') {
        pos++;
        coeff = read_number();
      }
    } else {
      coeff = read_number();
    }
    if (coeff > 0) result = ord_add(result, Ordinal::from_parts({{exp, coeff}}));
  }
  return result;
}

}  // namespace pacheck
