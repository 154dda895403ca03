#include "pacheck/beta.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pacheck {

BigNat rm(const BigNat& x, const BigNat& y) {
  if (x == 0) return y;
  return y % x;
}

BigNat beta(const BigNat& x1, const BigNat& x2, const BigNat& x3) {
  return rm(1 + (x3 + 1) * x2, x1);
}

bool witness_valid(const BetaWitness& w) {
  for (std::size_t i = 0; i < w.sequence.size(); i++)
    if (beta(w.u, w.v, BigNat(i)) != w.sequence[i]) return false;
  return true;
}

namespace {

// Inverse of x mod n (n >= 1, gcd(x, n) = 1) by extended Euclid.
BigNat mod_inverse(const BigNat& x, const BigNat& n) {
  BigNat r0 = n, r1 = x % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigNat q = r0 / r1;
    BigNat r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigNat s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return ((s0 % n) + n) % n;
}

// For a fixed v, the least u with u = a[i] mod (1 + (i+1)v) for all i, if the
// residue system is solvable; requires a[i] < modulus.  CRT merge.
std::optional<BigNat> solve_for_v(const std::vector<BigNat>& a, const BigNat& v) {
  BigNat u = 0, m = 1;  // current solution mod m
  for (std::size_t i = 0; i < a.size(); i++) {
    BigNat mi = 1 + BigNat(i + 1) * v;
    if (a[i] >= mi) return std::nullopt;
    BigNat diff = a[i] - u;  // solve u + m*t = a[i] (mod mi)
    BigNat g = big_gcd(m, mi);
    BigNat rem = ((diff % mi) + mi) % mi;
    if (rem % g != 0) return std::nullopt;
    BigNat m2 = mi / g;
    if (m2 > 1) {
      BigNat t = (rem / g) % m2 * mod_inverse((m / g) % m2, m2) % m2;
      u += m * t;
      m *= m2;
      u %= m;
    }
  }
  return u;
}

}  // namespace

BetaWitness find_witness_serial(const std::vector<BigNat>& a) {
  BetaWitness w;
  w.sequence = a;
  if (a.empty()) {
    w.u = 0;
    w.v = 0;
    return w;
  }
  for (BigNat v = 0;; v += 1) {
    if (auto u = solve_for_v(a, v)) {
      w.v = v;
      w.u = *u;
      return w;
    }
  }
}

BetaWitness encode_sequence(const std::vector<BigNat>& a) {
  return find_witness_serial(a);
}

std::vector<BetaWitness> encode_sequence_batch_omp(
    const std::vector<std::vector<BigNat>>& batch) {
  std::vector<BetaWitness> out(batch.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(batch.size()); k++) {
    try {
      out[static_cast<std::size_t>(k)] =
          find_witness_serial(batch[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<std::pair<BigNat, BigNat>> brute_force_witnesses(
    const std::vector<BigNat>& a, unsigned v_cap, unsigned u_cap,
    std::size_t max_hits) {
  std::vector<std::pair<BigNat, BigNat>> hits;
  for (unsigned v = 0; v <= v_cap && hits.size() < max_hits; v++) {
    for (unsigned u = 0; u <= u_cap && hits.size() < max_hits; u++) {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; i++)
        ok = beta(u, v, BigNat(i)) == a[i];
      if (ok) hits.emplace_back(v, u);
    }
  }
  return hits;
}

Formula build_bt_formula() {
  // (Ew)(x1 = ((1 + (x3 + 1) * x2) * w + x4) & (x4 < 1 + (x3 + 1) * x2))
  Term one = mk_numeral(1);
  Term modulus = mk_add(one, mk_mul(mk_add(mk_var(3), one), mk_var(2)));
  VarIndex w = least_fresh({1, 2, 3, 4});
  Formula eq = mk_eq(mk_var(1), mk_add(mk_mul(modulus, mk_var(w)), mk_var(4)));
  Formula lt = mk_less(mk_var(4), modulus);
  return mk_exists(w, mk_and(eq, lt));
}

Formula bt_instance(const Term& x1, const Term& x2, const Term& x3, const Term& x4) {
  static const Formula bt = build_bt_formula();
  Formula f = bt;
  // Route through temporary high indices so slot values mentioning x1..x4
  // cannot collide with the remaining slots.
  const Term slots[4] = {x1, x2, x3, x4};
  std::set<VarIndex> used = all_vars(bt);
  for (const Term& t : slots)
    for (VarIndex v : term_vars(t)) used.insert(v);
  VarIndex base = *used.rbegin() + 1;
  for (VarIndex k = 0; k < 4; k++)
    f = substitute_avoiding_capture(f, k + 1, mk_var(base + k));
  for (VarIndex k = 0; k < 4; k++)
    f = substitute_avoiding_capture(f, base + k, slots[k]);
  return f;
}

}  // namespace pacheck
