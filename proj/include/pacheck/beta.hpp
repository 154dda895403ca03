// Godel's Beta function and the CRT-based finite-sequence encoder.
//
// beta(x1, x2, x3) = rm(1 + (x3 + 1) * x2, x1), rm(x, y) the remainder of y
// divided by x (total: rm(0, y) = y).  encode_sequence finds the
// lexicographically least witness pair (v, u) with beta(u, v, i) = a[i] for
// all i < len(a).
//
// Two witness searches are kept side by side: find_witness_serial scans
// v = 0, 1, 2, ... and solves each residue system directly (the reference),
// and encode_sequence_batch_omp runs the same search across a batch of
// sequences on OpenMP threads.  Both produce identical witnesses.

#ifndef PACHECK_BETA_HPP
#define PACHECK_BETA_HPP

#include <vector>

#include "pacheck/bignat.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck {

BigNat rm(const BigNat& x, const BigNat& y);
BigNat beta(const BigNat& x1, const BigNat& x2, const BigNat& x3);

struct BetaWitness {
  BigNat u;
  BigNat v;
  std::vector<BigNat> sequence;
};

bool witness_valid(const BetaWitness& w);

BetaWitness encode_sequence(const std::vector<BigNat>& a);
BetaWitness find_witness_serial(const std::vector<BigNat>& a);
std::vector<BetaWitness> encode_sequence_batch_omp(
    const std::vector<std::vector<BigNat>>& batch);

// Truly brute force over (v, u) pairs below the given caps; test oracle for
// minimality.  Returns every valid pair in lexicographic (v, u) order.
std::vector<std::pair<BigNat, BigNat>> brute_force_witnesses(
    const std::vector<BigNat>& a, unsigned v_cap, unsigned u_cap,
    std::size_t max_hits);

// The Bt formula: (E w)((x1 = (((1 + (x3 + 1) * x2) * w) + x4)) & (x4 < 1 + (x3 + 1) * x2)),
// free variables exactly {x1, x2, x3, x4}, abbreviations expanded.
Formula build_bt_formula();

// Bt with its four argument slots instantiated (capture-safe).
Formula bt_instance(const Term& x1, const Term& x2, const Term& x3, const Term& x4);

}  // namespace pacheck

#endif
