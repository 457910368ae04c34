// Truncated formal power series over ExactScalar.
//
// A TruncatedSeries is a sparse polynomial together with a truncation policy:
// every variable carries a weight and belongs to a group, and each group g has
// a cap T_g.  A monomial is retained iff for every group the weighted degree
// sum_{v in g} weight_v * exp_v stays <= T_g.  Arithmetic eagerly drops
// monomials outside the window, so every retained coefficient is exact.
//
// The weights encode "this variable stands for a j-th order increment": in the
// derivative-limit machinery the variable u_{l,j} has weight j and group l,
// and T_l is the total derivative order requested at point l.

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "charderiv/multipoly.hpp"

namespace charderiv {

struct TruncPolicy {
  std::vector<int> weight;  // per registry variable
  std::vector<int> group;   // per registry variable
  std::vector<int> cap;     // per group

  bool admits(const Exponents& e) const;
};

using PolicyPtr = std::shared_ptr<const TruncPolicy>;

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(RegistryPtr reg, PolicyPtr policy);

  static TruncatedSeries constant(RegistryPtr reg, PolicyPtr policy, const ExactScalar& c);
  static TruncatedSeries variable(RegistryPtr reg, PolicyPtr policy, size_t var);

  const RegistryPtr& registry() const { return reg_; }
  const PolicyPtr& policy() const { return policy_; }
  const std::map<Exponents, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExactScalar coeff(const Exponents& e) const;
  ExactScalar constant_term() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries& operator*=(const ExactScalar& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const ExactScalar& s) { return a *= s; }
  friend TruncatedSeries operator*(const ExactScalar& s, TruncatedSeries a) { return a *= s; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.terms_ == b.terms_;
  }

  // exp of a series whose constant term must vanish; the sum
  // 1 + x + x^2/2! + ... terminates because x^n leaves the window.
  TruncatedSeries exp() const;

  void add_term(const Exponents& e, const ExactScalar& c);
  std::string str() const;

 private:
  RegistryPtr reg_;
  PolicyPtr policy_;
  std::map<Exponents, ExactScalar> terms_;
};

}  // namespace charderiv
