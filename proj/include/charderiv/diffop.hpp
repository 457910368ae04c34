// Differential operators in commuting derivative symbols.
//
// A DiffOperator is an integer-linear combination of monomials in the symbols
// d_1, ..., d_n (exponent vectors over a fixed arity).  The family D_k that
// turns k-fold derivatives of characteristic-polynomial ratios into
// derivatives in auxiliary variables is built by the recurrence
//   D_1 = d_1,   lim D_k = lim D_{k-1} [d_1 + sum_{l<k} u_l d_{l+1}],
// extracting the pure-derivative part by acting on monomials.  Every monomial
// of D_k has weighted degree sum_j j*e_j equal to k.

#pragma once

#include <map>

#include "charderiv/series.hpp"

namespace charderiv {

struct DiffOperator {
  size_t nvars = 0;
  std::map<Exponents, Integer> terms;

  static DiffOperator identity(size_t nvars);
  static DiffOperator monomial(size_t nvars, Exponents e, Integer c = Integer(1));

  // Re-embed into a wider variable list: symbol i becomes symbol offset+i.
  DiffOperator lift(size_t nvars_global, size_t offset) const;

  DiffOperator operator*(const DiffOperator& o) const;
  DiffOperator pow(int m) const;

  // True iff every monomial has weighted degree k, where the 1-based symbol j
  // carries weight j.
  bool homogeneous_weighted(long k) const;

  std::string str() const;  // e.g. "d1^3 + 3 d2 d1 + d3"
};

// D_k embedded into arity d (requires d >= k).
DiffOperator build_D(int k, int d);

// Apply a pure-derivative operator to a truncated series and evaluate at 0:
//   sum_e c_e * e! * coeff(u^e).
// Throws if some needed exponent lies outside the series truncation window
// ("insufficient truncation"), which would otherwise silently read a zero.
ExactScalar apply_operator_at_zero(const DiffOperator& op, const TruncatedSeries& s);

}  // namespace charderiv
