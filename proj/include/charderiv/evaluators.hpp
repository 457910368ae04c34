// Evaluators for limits of mixed higher derivatives of det/Vandermonde and
// Pfaffian/Vandermonde ratios, by three independent routes:
//
//  * operator route: residue transforms plus the D_k operator family;
//  * combinatorial route: Kostka-number expansions over shifted partitions;
//  * first-order route: multinomial composition sums (derivative orders <= 1).
//
// All evaluators return exact Gaussian rationals.  Agreement across routes
// (and with the brute-force polynomial oracle) is the correctness story of
// this library.

#pragma once

#include "charderiv/combinatorics.hpp"
#include "charderiv/diffop.hpp"
#include "charderiv/jets.hpp"
#include "charderiv/ktransform.hpp"
#include "charderiv/linalg.hpp"

namespace charderiv {

// ---- operator route ------------------------------------------------------

// lim_{x->chi} (prod d^n) Pf[[A(x_a,x_c), B_d(x_a)], [-B_b(x_c), C]] / Delta_P.
// pts give the merging points/orders for the P row variables, B has Q
// entries, C is a constant antisymmetric Q x Q matrix, P + Q even.
ExactScalar eval_pf_main(const std::vector<PointDerivs>& pts, const PolyKernel& A,
                         const std::vector<UniPoly>& B, const RingMatrix<ExactScalar>& C);

// lim (prod d^n) det[B_b(x_a)] / Delta_P  with P column functions.
ExactScalar eval_det_onesided(const std::vector<PointDerivs>& pts,
                              const std::vector<UniPoly>& B);

// lim (prod d^n)(prod d^ntilde) det[B(x_a,y_b)] / (Delta_P(x) Delta_P(y)).
ExactScalar eval_det_twosided(const std::vector<PointDerivs>& xpts,
                              const std::vector<PointDerivs>& ypts, const PolyKernel& B);

// Kernel supplied as a jet provider instead of a polynomial, for kernels that
// only exist as Taylor data (ensemble limits, truncated transcendental
// kernels).  jet_of(x, y, o1, o2) must return the jet at (x, y) with at least
// the requested orders.
using KernelJetFn =
    std::function<KernelJet(const ExactScalar&, const ExactScalar&, int, int)>;
ExactScalar eval_det_twosided(const std::vector<PointDerivs>& xpts,
                              const std::vector<PointDerivs>& ypts, const KernelJetFn& jet_of);

// ---- combinatorial (Kostka) route ---------------------------------------

// Single point per side, derivative exponents alpha (x side) and beta
// (y side), both of length k:
//   alpha! beta! sum_{mu,lambda} K_{mu,alpha} K_{lambda,beta} / (muhat! lambdahat!)
//     det[ d^muhat_a d^lambdahat_b B(chi,xi) ].
ExactScalar eval_det_kostka(const WeightVector& alpha, const WeightVector& beta,
                            const ExactScalar& chi, const ExactScalar& xi,
                            const PolyKernel& B);
// Same sum taken on a precomputed kernel jet (orders at least
// |alpha| + k - 1 and |beta| + k - 1).
ExactScalar eval_det_kostka(const WeightVector& alpha, const WeightVector& beta,
                            const KernelJet& jet);

// One merging point, 2k variables with exponents alpha:
//   alpha! sum_mu K_{mu,alpha}/muhat! Pf[ d^muhat_a d^muhat_b A |_(chi,chi) ].
ExactScalar eval_pf_kostka(const WeightVector& alpha, const ExactScalar& chi,
                           const PolyKernel& A);

// Two merging points chi != xi, k variables at each, the j-th variable pair
// carrying (d_x1j d_x2j)^{alpha_j}.
ExactScalar eval_pf_twopoint_kostka(const WeightVector& alpha, const ExactScalar& chi,
                                    const ExactScalar& xi, const PolyKernel& A);

// Multi-sum coefficient: sum over compositions r^(l) of x_l and s^(j) of y_j
// of prod_{j,l} C(r_j^(l) + s_l^(j), r_j^(l)); zero if any argument is
// negative, 1 for empty tuples.
Integer a_multisum(const std::vector<long>& x, const std::vector<long>& y);

// Signed double-permutation sum of a_multisum over the argument differences;
// antisymmetric separately in each tuple.
Integer a_tilde(const std::vector<long>& lhat, const std::vector<long>& nhat,
                const std::vector<long>& muhat, const std::vector<long>& etahat);

// ---- first-order route ---------------------------------------------------

// k x k determinant, single point, k-h first derivatives:
//   sum_{r comp of k-h} multinom(k-h;r) det[d^{r_a+a-1}B_b(chi)] / prod (r_c+c-1)!.
ExactScalar eval_det_first_order_onesided(int k, int h, const ExactScalar& chi,
                                          const std::vector<UniPoly>& B);
// Two-sided version with k-h first derivatives on each side.
ExactScalar eval_det_first_order_twosided(int k, int h, const ExactScalar& chi,
                                          const ExactScalar& xi, const PolyKernel& B);

// Same quantities through the Borel-transform determinant,
//   lim_{u->0} d_u^{k-h} det[ d_u^{a-1} (Borel B_b)(u) ],
// kept as a structurally different cross-check.
ExactScalar eval_det_borel_onesided(int k, int h, const ExactScalar& chi,
                                    const std::vector<UniPoly>& B);
ExactScalar eval_det_borel_twosided(int k, int h, const ExactScalar& chi,
                                    const ExactScalar& xi, const PolyKernel& B);

// Operator product prod_l prod_k D_k^{m_{l,k}} on the space's variables for
// one side (offsets per point), exposed for reuse and tests.
DiffOperator side_operator(const TransformSpace& space, size_t side,
                           const std::vector<PointDerivs>& pts);

}  // namespace charderiv
