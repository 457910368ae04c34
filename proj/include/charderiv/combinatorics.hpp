// Partitions, Kostka numbers, Schur evaluation, factorial Schur values.
//
// A Partition is a vector of positive parts in non-increasing order; a
// WeightVector is a vector of non-negative integers (a composition when the
// order matters).  The shifted sequence of a partition lambda padded to k
// parts is lhat_j = j - 1 + lambda_{k-j+1}, a strictly increasing sequence;
// it is what determinant-style formulas index their rows and columns with.

#pragma once

#include <vector>

#include "charderiv/exact.hpp"

namespace charderiv {

using Partition = std::vector<int>;     // non-increasing, positive parts
using WeightVector = std::vector<int>;  // non-negative entries

bool is_partition(const Partition& p);

// All partitions of m with at most max_len parts and parts <= max_part,
// in reverse-lexicographic order (largest first part first).  m = 0 yields
// the single empty partition.
std::vector<Partition> partitions(int m, int max_len, int max_part = -1);

// All ordered tuples of n non-negative integers summing to m, in
// lexicographic order on the tuple.
std::vector<WeightVector> compositions(int m, int n);

// lhat_j = j - 1 + lambda_{k-j+1} (lambda padded with zeros to k parts).
std::vector<long> shifted_sequence(const Partition& lambda, int k);

// Product of factorials of a sequence (entries must be >= 0).
Rational sequence_factorial(const std::vector<long>& seq);

// 1/n! for n >= 0, and 0 for n < 0 (the reciprocal-factorial convention
// used throughout the determinant formulas).
Rational inv_factorial_or_zero(long n);

// Kostka number K_{lambda,alpha}: semistandard tableaux of shape lambda and
// content alpha.  Invariant under permutations of alpha; zero unless
// |alpha| = |lambda|.  Memoized per thread.
Integer kostka(const Partition& lambda, const WeightVector& alpha);

// Independent brute-force SSYT count by cell-by-cell backtracking; used to
// validate kostka on small shapes.
Integer kostka_bruteforce(const Partition& lambda, const WeightVector& alpha);

// K_{lambda,(1,...,1)} via the hook length formula.
Integer kostka_ones_hooks(const Partition& lambda);
// Same number via m! * prod_{a<b}(lhat_b - lhat_a) / prod lhat_j!.
Integer kostka_ones_shifted(const Partition& lambda);

// Schur polynomial value at k points.
// Bialternant route: det[u_a^{lhat_b}] / prod_{a<b}(u_b - u_a); requires
// pairwise distinct points.
ExactScalar schur_eval_bialternant(const Partition& lambda,
                                   const std::vector<ExactScalar>& u);
// Monomial route: sum over weight vectors alpha of K_{lambda,alpha} u^alpha;
// no distinctness requirement.
ExactScalar schur_eval_kostka(const Partition& lambda,
                              const std::vector<ExactScalar>& u);

// Factorial Schur value t_nu(lhat) =
//   det[ lhat_a (lhat_a - 1) ... (lhat_a - nuhat_b + 1) ] / prod_{a<b}(lhat_b - lhat_a),
// with both sequences shifted to k parts.  Integer-valued.
Rational factorial_schur(const Partition& nu, const Partition& lambda, int k);

// m! / prod r_j! for a composition r of m.
Integer multinomial(int m, const WeightVector& r);

}  // namespace charderiv
