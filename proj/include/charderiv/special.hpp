// Classical special functions at the exactness level each caller needs:
// generalised and truncated Laguerre polynomials and the Barnes G function
// exactly at rational arguments, Hermite polynomials as integer coefficient
// tables, and the modified Bessel function numerically in double precision.

#pragma once

#include <vector>

#include "charderiv/exact.hpp"

namespace charderiv {

// Generalised Laguerre polynomial
//   L_p^{(q)}(x) = sum_{i=0}^p (-1)^i C(p+q, p-i) x^i / i!.
Rational laguerre(long p, long q, const Rational& x);

// Truncated Laguerre polynomial L_{a,b}(x) = sum_{m=0}^b C(a,m) (-x)^m / m!;
// for b >= a this is the full L_a^{(0)}(x).
Rational laguerre_truncated(long a, long b, const Rational& x);

// Coefficient table of the (physicists') Hermite polynomial H_n, index i
// multiplying x^i; built from H_{n+1} = 2x H_n - 2n H_{n-1}.
std::vector<Integer> hermite_coeffs(int n);

// Barnes G function at positive integers: G(n) = prod_{j=0}^{n-2} j!, so
// G(1) = G(2) = 1, G(3) = 1, G(4) = 2.
Integer barnes_g(long n);

// Modified Bessel function of the first kind, integer order nu >= 0, by the
// ascending power series; terms are added until they drop below 1e-18 of the
// running sum.
double bessel_i(int nu, double x);

}  // namespace charderiv
