// Schematic diagonalization: fixed-point sentences from any two-variable
// formula.

#ifndef PACHECK_DIAGONAL_HPP
#define PACHECK_DIAGONAL_HPP

#include "pacheck/codec.hpp"
#include "pacheck/primrec.hpp"
#include "pacheck/syntax.hpp"

namespace pacheck {

struct DiagonalResult {
  Formula input;        // W(x1, x2)
  Formula presubst;     // the formula whose Godel number gets diagonalized in
  GodelNumber fixed_gn; // encode(presubst)
  Formula sentence;     // presubst with x1 := numeral(fixed_gn)
};

// P := (A x2)~W; sentence := (A x2)~W[x1 := numeral(encode(P))].  Closed.
DiagonalResult goedel_sentence(const Formula& w, Codec codec = Codec::Positional);

// P := ~W; sentence := ~W[x1 := numeral(encode(P))].  Free variable x2 remains.
DiagonalResult anand_fixedpoint(const Formula& w, Codec codec = Codec::Positional);

// Runs q_check(K#, proof#) and, independently, checks that the proof is an
// accepted hypothesis-free derivation of K[x1 := numeral(K#)]; throws if the
// two routes ever disagree.
bool self_reference_demo(const Formula& k, const ProofScript& proof,
                         const SystemProfile& p, Codec codec = Codec::Positional);

}  // namespace pacheck

#endif
