#include "charderiv/exact.hpp"

#include <sstream>

namespace charderiv {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer rising_factorial(const Integer& a, long n) {
  Integer r(1);
  for (long j = 0; j < n; ++j) r *= a + j;
  return r;
}

Integer falling_factorial(const Integer& a, long n) {
  Integer r(1);
  for (long j = 0; j < n; ++j) r *= a - j;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("ExactScalar: division by zero");
  Rational n = re_ * re_ + im_ * im_;
  return ExactScalar(re_ / n, -im_ / n);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

ExactScalar ExactScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  ExactScalar base = *this, acc = 1;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string rational_str(const Rational& r) {
  // Always include the denominator so the representation is unambiguous.
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string ExactScalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string s = rational_str(re_);
  if (sgn(im_) >= 0) s += "+";
  return s + rational_str(im_) + "*i";
}

namespace {

// Parses "p", "p/q", or "-p/q" into a rational; pos advances past it.
Rational parse_rational(const std::string& t, size_t& pos) {
  size_t start = pos;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(t[start]))))
    throw std::invalid_argument("ExactScalar: malformed number in '" + t + "'");
  std::string num = t.substr(start, pos - start);
  std::string den = "1";
  if (pos < t.size() && t[pos] == '/') {
    ++pos;
    size_t ds = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == ds) throw std::invalid_argument("ExactScalar: malformed denominator in '" + t + "'");
    den = t.substr(ds, pos - ds);
  }
  Rational r{Integer(num), Integer(den)};
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("ExactScalar: zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace

ExactScalar ExactScalar::from_string(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("ExactScalar: empty string");
  // Pure imaginary shorthand "i" / "-i".
  if (t == "i") return ExactScalar::i();
  if (t == "-i") return -ExactScalar::i();
  size_t pos = 0;
  Rational first = parse_rational(t, pos);
  if (pos == t.size()) return ExactScalar(first);
  if (t.compare(pos, 2, "*i") == 0 && pos + 2 == t.size())
    return ExactScalar(Rational(0), first);
  if (t[pos] != '+' && t[pos] != '-')
    throw std::invalid_argument("ExactScalar: malformed value '" + text + "'");
  Rational second = parse_rational(t, pos);
  if (t.compare(pos, 2, "*i") != 0 || pos + 2 != t.size())
    throw std::invalid_argument("ExactScalar: malformed imaginary part in '" + text + "'");
  return ExactScalar(first, second);
}

}  // namespace charderiv
