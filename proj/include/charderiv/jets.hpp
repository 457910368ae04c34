// Jets (truncated Taylor data) of functions and kernels, polynomial test
// kernels, and derivative specifications.
//
// A FunctionJet stores point chi and coefficients c_j = f^(j)(chi)/j!; a
// KernelJet stores the grid c_{ab} = d_x^a d_y^b B(chi,xi)/(a! b!).  The
// normalized form keeps every downstream formula free of stray factorials.

#pragma once

#include <vector>

#include "charderiv/exact.hpp"
#include "charderiv/multipoly.hpp"

namespace charderiv {

struct FunctionJet {
  ExactScalar point;
  std::vector<ExactScalar> c;  // c[j] = f^(j)(point)/j!

  int order() const { return static_cast<int>(c.size()) - 1; }
  // f^(j)(point), un-normalized.
  ExactScalar deriv(int j) const { return c.at(static_cast<size_t>(j)) * ExactScalar(factorial(j)); }
};

struct KernelJet {
  ExactScalar p1, p2;
  std::vector<std::vector<ExactScalar>> c;  // c[a][b] = d^a d^b B /(a! b!)

  int order1() const { return static_cast<int>(c.size()) - 1; }
  int order2() const { return c.empty() ? -1 : static_cast<int>(c[0].size()) - 1; }
  ExactScalar deriv(int a, int b) const {
    return c.at(static_cast<size_t>(a)).at(static_cast<size_t>(b)) *
           ExactScalar(Integer(factorial(a) * factorial(b)));
  }
};

// Dense univariate polynomial; the column functions B_b of the determinant
// identities are taken from this class in tests.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ExactScalar> coeffs);

  const std::vector<ExactScalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  ExactScalar eval(const ExactScalar& x) const;
  UniPoly derivative(int n = 1) const;
  FunctionJet jet(const ExactScalar& point, int order) const;
  MultiPoly to_multipoly(RegistryPtr reg, size_t var) const;

 private:
  std::vector<ExactScalar> c_;  // c_[i] multiplies x^i
};

// Dense bivariate polynomial kernel B(x,y) = sum c[i][j] x^i y^j.
class PolyKernel {
 public:
  PolyKernel() = default;
  explicit PolyKernel(std::vector<std::vector<ExactScalar>> coeffs);

  // A(x,y) = sum_{i,j} c[i][j] (x^i y^j - x^j y^i): manifestly skew-symmetric.
  static PolyKernel antisymmetrize(const std::vector<std::vector<ExactScalar>>& coeffs);

  const std::vector<std::vector<ExactScalar>>& coeffs() const { return c_; }
  bool is_skew() const;

  ExactScalar eval(const ExactScalar& x, const ExactScalar& y) const;
  KernelJet jet(const ExactScalar& x, const ExactScalar& y, int order1, int order2) const;
  MultiPoly to_multipoly(RegistryPtr reg, size_t var_x, size_t var_y) const;
  // B(x, y0) as a univariate polynomial in x.
  UniPoly slice_y(const ExactScalar& y0) const;

 private:
  std::vector<std::vector<ExactScalar>> c_;  // rectangular table
};

// Derivative request at one merging point: P_l = orders.size() variables
// collapse onto chi, variable i carrying d^(orders[i]).
struct PointDerivs {
  ExactScalar chi;
  std::vector<int> orders;  // each >= 0

  int mult() const { return static_cast<int>(orders.size()); }
  int total() const;  // T_l = sum of orders
};

int spec_total_vars(const std::vector<PointDerivs>& pts);   // P
int spec_max_order(const std::vector<PointDerivs>& pts);    // d (>= 1)
// m[l][k-1] = number of variables at point l with derivative order k.
std::vector<std::vector<int>> spec_multiplicities(const std::vector<PointDerivs>& pts, int d);
void spec_validate(const std::vector<PointDerivs>& pts);    // distinct points, orders >= 0

}  // namespace charderiv
