// Sparse multivariate polynomials over ExactScalar.
//
// Variables live in an immutable VarRegistry shared by every polynomial that
// participates in a computation; exponent vectors are indexed by registry
// position.  Terms are kept in a std::map ordered lexicographically on the
// exponent vector, zero coefficients are never stored, so structural equality
// of the term maps is exact mathematical equality.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charderiv/exact.hpp"

namespace charderiv {

using Exponents = std::vector<int>;

class VarRegistry {
 public:
  static std::shared_ptr<const VarRegistry> make(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  size_t index(const std::string& name) const;

 private:
  explicit VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

  static MultiPoly constant(RegistryPtr reg, const ExactScalar& c);
  static MultiPoly variable(RegistryPtr reg, size_t var, int power = 1);
  static MultiPoly monomial(RegistryPtr reg, Exponents e, const ExactScalar& c);

  const RegistryPtr& registry() const { return reg_; }
  const std::map<Exponents, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  ExactScalar coeff(const Exponents& e) const;
  int degree_in(size_t var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const ExactScalar& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const ExactScalar& s) { return a *= s; }
  friend MultiPoly operator*(const ExactScalar& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  // d^n/d(var)^n, exact.
  MultiPoly derivative(size_t var, int n = 1) const;
  // Substitute var := value; the variable stays registered but no longer occurs.
  MultiPoly substitute(size_t var, const ExactScalar& value) const;
  // Full evaluation at a point (one value per registry slot).
  ExactScalar eval(const std::vector<ExactScalar>& point) const;

  std::string str() const;

  // Inserts c into the term map (adding to any existing coefficient);
  // removes the entry if the result is zero.
  void add_term(const Exponents& e, const ExactScalar& c);

 private:
  RegistryPtr reg_;
  std::map<Exponents, ExactScalar> terms_;
};

// Exact quotient p / (x_jnum - x_jden ... ), specifically p / (x_b - x_a)
// where a and b are registry indices.  Throws std::runtime_error if the
// division leaves a remainder: every caller divides by Vandermonde factors
// that must divide exactly, so a nonzero remainder is an internal invariant
// violation, not a user error.
MultiPoly divide_by_linear(const MultiPoly& p, size_t var_a, size_t var_b);

}  // namespace charderiv
