#include "charderiv/special.hpp"

#include <cmath>
#include <stdexcept>

namespace charderiv {

Rational laguerre(long p, long q, const Rational& x) {
  if (p < 0 || q < 0) throw std::invalid_argument("laguerre: orders must be >= 0");
  Rational acc(0);
  Rational xpow(1);
  for (long i = 0; i <= p; ++i) {
    Rational term = Rational(binomial(p + q, p - i)) * xpow / Rational(factorial(i));
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
    xpow *= x;
  }
  acc.canonicalize();
  return acc;
}

Rational laguerre_truncated(long a, long b, const Rational& x) {
  if (a < 0 || b < 0) throw std::invalid_argument("laguerre_truncated: indices must be >= 0");
  Rational acc(0);
  Rational xpow(1);
  for (long m = 0; m <= b; ++m) {
    Rational term = Rational(binomial(a, m)) * xpow / Rational(factorial(m));
    if (m % 2 == 0)
      acc += term;
    else
      acc -= term;
    xpow *= x;
  }
  acc.canonicalize();
  return acc;
}

std::vector<Integer> hermite_coeffs(int n) {
  if (n < 0) throw std::invalid_argument("hermite_coeffs: order must be >= 0");
  std::vector<Integer> prev{Integer(1)};  // H_0
  if (n == 0) return prev;
  std::vector<Integer> cur{Integer(0), Integer(2)};  // H_1
  for (int m = 1; m < n; ++m) {
    std::vector<Integer> next(static_cast<size_t>(m) + 2, Integer(0));
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * m * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer barnes_g(long n) {
  if (n < 1) throw std::invalid_argument("barnes_g: argument must be >= 1");
  Integer g(1);
  for (long j = 1; j <= n - 2; ++j) g *= factorial(j);
  return g;
}

double bessel_i(int nu, double x) {
  if (nu < 0) throw std::invalid_argument("bessel_i: order must be >= 0");
  double half = x / 2.0;
  // term_m = (x/2)^(2m+nu) / (m! (m+nu)!), accumulated from m = 0.
  double term = std::pow(half, nu);
  for (int j = 1; j <= nu; ++j) term /= j;
  double sum = term;
  for (int m = 1; m < 10000; ++m) {
    term *= half * half / (static_cast<double>(m) * (m + nu));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace charderiv
