#include "charderiv/jets.hpp"

#include <stdexcept>

namespace charderiv {

UniPoly::UniPoly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactScalar UniPoly::eval(const ExactScalar& x) const {
  ExactScalar acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative(int n) const {
  if (n < 0) throw std::invalid_argument("UniPoly::derivative: negative order");
  std::vector<ExactScalar> d;
  for (size_t i = static_cast<size_t>(n); i < c_.size(); ++i)
    d.push_back(c_[i] * ExactScalar(falling_factorial(Integer(static_cast<long>(i)), n)));
  return UniPoly(std::move(d));
}

FunctionJet UniPoly::jet(const ExactScalar& point, int order) const {
  // Taylor coefficient j at `point` is sum_i c_i C(i,j) point^{i-j}.
  FunctionJet f;
  f.point = point;
  f.c.assign(static_cast<size_t>(order) + 1, ExactScalar(0));
  for (int j = 0; j <= order; ++j)
    for (size_t i = static_cast<size_t>(j); i < c_.size(); ++i)
      f.c[static_cast<size_t>(j)] +=
          c_[i] * ExactScalar(binomial(static_cast<long>(i), j)) * point.pow(static_cast<long>(i) - j);
  return f;
}

MultiPoly UniPoly::to_multipoly(RegistryPtr reg, size_t var) const {
  MultiPoly p(reg);
  Exponents e(reg->size(), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    e[var] = static_cast<int>(i);
    p.add_term(e, c_[i]);
  }
  return p;
}

PolyKernel::PolyKernel(std::vector<std::vector<ExactScalar>> coeffs) : c_(std::move(coeffs)) {
  size_t cols = 0;
  for (const auto& row : c_) cols = std::max(cols, row.size());
  for (auto& row : c_) row.resize(cols, ExactScalar(0));
}

PolyKernel PolyKernel::antisymmetrize(const std::vector<std::vector<ExactScalar>>& coeffs) {
  size_t n = coeffs.size();
  for (const auto& row : coeffs) n = std::max(n, row.size());
  std::vector<std::vector<ExactScalar>> t(n, std::vector<ExactScalar>(n, ExactScalar(0)));
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < coeffs[i].size(); ++j) {
      t[i][j] += coeffs[i][j];
      t[j][i] -= coeffs[i][j];
    }
  return PolyKernel(std::move(t));
}

bool PolyKernel::is_skew() const {
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) {
      ExactScalar mirror = (j < c_.size() && i < c_[j].size()) ? c_[j][i] : ExactScalar(0);
      if (!(c_[i][j] == -mirror)) return false;
    }
  return true;
}

ExactScalar PolyKernel::eval(const ExactScalar& x, const ExactScalar& y) const {
  ExactScalar acc(0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j)
      if (!c_[i][j].is_zero()) acc += c_[i][j] * x.pow(static_cast<long>(i)) * y.pow(static_cast<long>(j));
  return acc;
}

KernelJet PolyKernel::jet(const ExactScalar& x, const ExactScalar& y, int order1,
                          int order2) const {
  KernelJet k;
  k.p1 = x;
  k.p2 = y;
  k.c.assign(static_cast<size_t>(order1) + 1,
             std::vector<ExactScalar>(static_cast<size_t>(order2) + 1, ExactScalar(0)));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j].is_zero()) continue;
      for (int a = 0; a <= std::min<int>(order1, static_cast<int>(i)); ++a)
        for (int b = 0; b <= std::min<int>(order2, static_cast<int>(j)); ++b)
          k.c[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
              c_[i][j] * ExactScalar(binomial(static_cast<long>(i), a)) *
              ExactScalar(binomial(static_cast<long>(j), b)) * x.pow(static_cast<long>(i) - a) *
              y.pow(static_cast<long>(j) - b);
    }
  return k;
}

MultiPoly PolyKernel::to_multipoly(RegistryPtr reg, size_t var_x, size_t var_y) const {
  MultiPoly p(reg);
  Exponents e(reg->size(), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) {
      e[var_x] = static_cast<int>(i);
      e[var_y] = static_cast<int>(j);
      p.add_term(e, c_[i][j]);
      e[var_x] = e[var_y] = 0;
    }
  return p;
}

UniPoly PolyKernel::slice_y(const ExactScalar& y0) const {
  std::vector<ExactScalar> out(c_.size(), ExactScalar(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j)
      if (!c_[i][j].is_zero()) out[i] += c_[i][j] * y0.pow(static_cast<long>(j));
  return UniPoly(std::move(out));
}

int PointDerivs::total() const {
  int t = 0;
  for (int n : orders) t += n;
  return t;
}

int spec_total_vars(const std::vector<PointDerivs>& pts) {
  int p = 0;
  for (const auto& pt : pts) p += pt.mult();
  return p;
}

int spec_max_order(const std::vector<PointDerivs>& pts) {
  int d = 1;
  for (const auto& pt : pts)
    for (int n : pt.orders) d = std::max(d, n);
  return d;
}

std::vector<std::vector<int>> spec_multiplicities(const std::vector<PointDerivs>& pts, int d) {
  std::vector<std::vector<int>> m(pts.size(), std::vector<int>(static_cast<size_t>(d), 0));
  for (size_t l = 0; l < pts.size(); ++l)
    for (int n : pts[l].orders)
      if (n >= 1) ++m[l][static_cast<size_t>(n - 1)];
  return m;
}

void spec_validate(const std::vector<PointDerivs>& pts) {
  if (pts.empty()) throw std::invalid_argument("derivative spec: no points");
  for (const auto& pt : pts) {
    if (pt.orders.empty()) throw std::invalid_argument("derivative spec: point with no variables");
    for (int n : pt.orders)
      if (n < 0) throw std::invalid_argument("derivative spec: negative derivative order");
  }
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      if (pts[a].chi == pts[b].chi)
        throw std::invalid_argument("derivative spec: merging points must be distinct");
}

}  // namespace charderiv
