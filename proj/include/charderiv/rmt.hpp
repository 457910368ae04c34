// Concrete ensemble kernels and closed-form moment results: the complex
// Ginibre ensemble (finite size and bulk limit) and the circular unitary
// ensemble (finite size, inside the unit disc, and on the unit circle).
//
// Transcendental prefactors never enter the arithmetic.  Ginibre results are
// exact polynomials in t = |chi|^2 carrying the prefactor e^{k t} / pi^k
// symbolically; kernel jets are likewise payload-only, with the entrywise
// e^{|chi|^2} / pi (Ginibre limit) or 1 / pi (finite Ginibre) factor stripped.

#pragma once

#include <map>

#include "charderiv/combinatorics.hpp"
#include "charderiv/jets.hpp"

namespace charderiv {

// Exact polynomial in t = |chi|^2 (key = power of t); the full moment,
// normalized by the product of the k norms, is e^{k t} / pi^k times this.
using TPoly = std::map<long, Rational>;

struct GinibreMomentResult {
  int k = 0;  // prefactor e^{k t} / pi^k
  TPoly poly;
};

bool operator==(const GinibreMomentResult& a, const GinibreMomentResult& b);

Rational tpoly_eval(const TPoly& p, const Rational& t);
long tpoly_degree(const TPoly& p);  // -1 for the zero polynomial

// ---- Ginibre -------------------------------------------------------------

// Payload jet of the Ginibre kernel at (chi, conj chi).  N < 0 requests the
// bulk limit, whose true kernel is e^{x y} / pi: each entry carries an
// implicit factor e^{|chi|^2} / pi.  For finite N the kernel is
// (1/pi) sum_{j<N} (x y)^j / j! and the implicit entry factor is 1 / pi.
KernelJet ginibre_jet(long N, const ExactScalar& chi, int order1, int order2);

// pi * (finite-N kernel) as an exact polynomial, for oracle cross-checks.
PolyKernel ginibre_poly_kernel(long N);

// Bulk-limit moment of prod_j |d^{alpha_j} D(chi)|^2, normalized by
// prod_{j=N}^{N+k-1} pi j!; alpha may have fewer than k entries (padded with
// zeros).  Assembled from the Kostka / factorial-Schur double sum.
GinibreMomentResult ginibre_moment_general(int k, WeightVector alpha);

// Specialization: h plain factors and k - h first-derivative factors,
// via the explicit partition sum plus the two closed top terms.
GinibreMomentResult ginibre_moment_first(int k, int h);

// Specialization alpha = (n, 0, ...): truncated-Laguerre closed form.
GinibreMomentResult ginibre_moment_one_higher(int k, int n);

// Specialization alpha = (n1, n2, 0, ...), n1 >= n2, k >= 2: binomial
// double-sum closed form.
GinibreMomentResult ginibre_moment_two_higher(int k, int n1, int n2);

// ---- CUE -----------------------------------------------------------------

// Jet of sum_{j<N} (x y)^j at (chi, conj chi); no hidden prefactor.
KernelJet cue_jet(long N, const ExactScalar& chi, int order1, int order2);

// The same truncated geometric kernel as an exact polynomial (oracle input).
PolyKernel cue_poly_kernel(long N);

// Finite-N moment <|D(chi)|^{2 h0} |D'(chi)|^{2 h1} |D''(chi)|^{2 h2}> with
// h0 = k - h1 - h2 >= 0, through the Borel-determinant route on the kernel of
// index N + k.  d = 1 (h2 = 0) uses Laguerre-expanded entries and requires
// chi != 0; d = 2 uses the coefficient-law entries in four variables.
ExactScalar cue_finite_moment(long N, int k, int h1, int h2, const ExactScalar& chi);

// Independent d = 1 route through the generic coefficient-law series
// (cross-check; works at chi = 0 too).
ExactScalar cue_finite_moment_d1_borel(long N, int k, int h1, const ExactScalar& chi);

// N -> infinity closed form inside the unit disc (t = |chi|^2 < 1):
//   h1! L_{h1}^{(0)}(-k^2 t) / (1 - t)^{k^2 + 2 h1},
// which at h1 = 0 is 1 / (1 - t)^{k^2}.
Rational cue_disc_limit(int k, int h1, const Rational& t);

// Unit-circle limit at chi = 1 for d = 1: the finite-N moment divided by
// N^{k^2 + 2 h1} converges to
//   lim_{u->0} (c (c+1) + d_u - d_u^2)^{h1} det[ g_{ab}(u) ],
// with g_{ab}(u) = sum_p u^p / (p! (k + a - b + p)!).  The one-parameter
// family covers both studied normalizations (c = 0 and c = -1/2).
Rational cue_circle_limit_d1_exact(int k, int h1, const Rational& c);
double cue_circle_limit_d1(int k, int h1, const Rational& c);

}  // namespace charderiv
