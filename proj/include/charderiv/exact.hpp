// Exact Gaussian-rational scalar type.
//
// An ExactScalar is a complex number whose real and imaginary parts are
// arbitrary-precision rationals (GMP mpq).  Every operation is exact; the
// canonical text form always spells out the denominator ("3/2", "0/1",
// "1/2+-1/3*i") so that serialized output is byte-stable across platforms.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charderiv {

using Rational = mpq_class;
using Integer = mpz_class;

// Factorials / binomials as exact integers.  binomial returns 0 for
// out-of-range arguments (n < 0, k < 0 or k > n), which is the convention
// every combinatorial sum in this library relies on.
Integer factorial(long n);
Integer binomial(long n, long k);
Integer rising_factorial(const Integer& a, long n);   // a (a+1) ... (a+n-1)
Integer falling_factorial(const Integer& a, long n);  // a (a-1) ... (a-n+1)

class ExactScalar {
 public:
  ExactScalar() : re_(0), im_(0) {}
  ExactScalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  ExactScalar(const Integer& v) : re_(v), im_(0) {}
  ExactScalar(const Rational& re) : re_(re), im_(0) { canonicalize(); }
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    canonicalize();
  }

  static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }
  static ExactScalar from_string(const std::string& text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return ExactScalar(re_, -im_); }
  ExactScalar inverse() const;
  ExactScalar pow(long n) const;  // n may be negative (nonzero base required)

  ExactScalar operator-() const { return ExactScalar(-re_, -im_); }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  // Canonical text form: "p/q" when real, "p/q+r/s*i" otherwise (the sign of
  // r is part of r, e.g. "0/1+-1/2*i" is written as "0/1-1/2*i").
  std::string str() const;
  double to_double_re() const { return re_.get_d(); }
  double to_double_im() const { return im_.get_d(); }

  // Total order usable as a map key (lexicographic on (re, im)).
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

 private:
  void canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
  }
  Rational re_, im_;
};

inline ExactScalar rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return ExactScalar(r);
}

std::string rational_str(const Rational& r);

}  // namespace charderiv
