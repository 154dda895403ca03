// Arbitrary-precision naturals and the few number-theory helpers the codecs need.

#ifndef PACHECK_BIGNAT_HPP
#define PACHECK_BIGNAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace pacheck {

using BigNat = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline BigNat big_pow(const BigNat& base, const BigNat& exp) {
  if (exp < 0) throw Error("big_pow: negative exponent");
  BigNat r = 1, b = base, e = exp;
  while (e > 0) {
    if ((e & 1) != 0) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline BigNat big_gcd(BigNat a, BigNat b) {
  while (b != 0) {
    BigNat t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string to_decimal(const BigNat& n) { return n.str(); }

inline BigNat from_decimal(const std::string& s) {
  if (s.empty()) throw Error("empty decimal literal");
  for (char c : s)
    if (c < '0' || c > '9') throw Error("bad decimal literal: " + s);
  return BigNat(s);
}

// Primes in order, extending the table on demand.
const BigNat& nth_prime(std::size_t i);

}  // namespace pacheck

#endif
