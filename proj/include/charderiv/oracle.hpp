// Brute-force reference evaluator.
//
// Works directly in the polynomial ring: build the determinant or Pfaffian
// with symbolic variables, divide out the Vandermonde factors exactly,
// differentiate, and substitute the merging points.  Slow but entirely
// independent of the residue-transform and combinatorial machinery, which is
// exactly what makes it a trustworthy referee.

#pragma once

#include "charderiv/jets.hpp"
#include "charderiv/linalg.hpp"

namespace charderiv {

// lim (prod d^n) Pf[[A(x_a,x_c), B_d(x_a)], [-B_b(x_c), C]] / Delta_P(x).
// Pass A = nullptr for a zero kernel block.
ExactScalar oracle_pf_general(const std::vector<PointDerivs>& pts, const PolyKernel* A,
                              const std::vector<UniPoly>& B, const RingMatrix<ExactScalar>& C);

// lim (prod d^n) det[B_b(x_a)] / Delta_P(x).
ExactScalar oracle_det_onesided(const std::vector<PointDerivs>& pts,
                                const std::vector<UniPoly>& B);

// lim (prod d^n)(prod d^ntilde) det[B(x_a,y_b)] / (Delta(x) Delta(y)).
ExactScalar oracle_det_twosided(const std::vector<PointDerivs>& xpts,
                                const std::vector<PointDerivs>& ypts, const PolyKernel& B);

// lim (prod d^n) Pf[A(x_a,x_b)] / Delta_P(x).
ExactScalar oracle_pf(const std::vector<PointDerivs>& pts, const PolyKernel& A);

}  // namespace charderiv
