#include "charderiv/oracle.hpp"

#include <stdexcept>

namespace charderiv {

namespace {

struct FlatSpec {
  RegistryPtr reg;
  std::vector<ExactScalar> point;  // substitution value per variable
  std::vector<int> order;          // derivative order per variable
};

FlatSpec flatten(const std::vector<std::vector<PointDerivs>>& sides,
                 const std::vector<std::string>& prefixes) {
  FlatSpec f;
  std::vector<std::string> names;
  for (size_t s = 0; s < sides.size(); ++s) {
    spec_validate(sides[s]);
    for (size_t l = 0; l < sides[s].size(); ++l)
      for (size_t i = 0; i < sides[s][l].orders.size(); ++i) {
        names.push_back(prefixes[s] + std::to_string(l + 1) + "_" + std::to_string(i + 1));
        f.point.push_back(sides[s][l].chi);
        f.order.push_back(sides[s][l].orders[i]);
      }
  }
  f.reg = VarRegistry::make(std::move(names));
  return f;
}

// Divide by the Vandermonde of the variable block [base, base+count), apply
// the requested derivatives of that block, leaving the polynomial still
// symbolic in all variables.
MultiPoly strip_vandermonde(MultiPoly p, size_t base, size_t count) {
  for (size_t a = 0; a < count; ++a)
    for (size_t b = a + 1; b < count; ++b) p = divide_by_linear(p, base + a, base + b);
  return p;
}

ExactScalar finish(MultiPoly p, const FlatSpec& f) {
  for (size_t v = 0; v < f.order.size(); ++v)
    if (f.order[v] > 0) p = p.derivative(v, f.order[v]);
  for (size_t v = 0; v < f.point.size(); ++v) p = p.substitute(v, f.point[v]);
  Exponents zero(f.reg->size(), 0);
  return p.coeff(zero);
}

}  // namespace

ExactScalar oracle_pf_general(const std::vector<PointDerivs>& pts, const PolyKernel* A,
                              const std::vector<UniPoly>& B, const RingMatrix<ExactScalar>& C) {
  FlatSpec f = flatten({pts}, {"x"});
  size_t P = f.point.size();
  size_t Q = B.size();
  if ((P + Q) % 2 != 0 || P + Q == 0)
    throw std::invalid_argument("oracle_pf_general: P + Q must be positive and even");
  if (C.rows() != Q || C.cols() != Q || (Q > 0 && !is_antisymmetric(C)))
    throw std::invalid_argument("oracle_pf_general: C must be antisymmetric Q x Q");
  if (A && !A->is_skew())
    throw std::invalid_argument("oracle_pf_general: kernel must be skew-symmetric");
  MultiPoly zero(f.reg);
  MultiPoly one = MultiPoly::constant(f.reg, ExactScalar(1));
  RingMatrix<MultiPoly> M(P + Q, P + Q, zero);
  for (size_t a = 0; a < P; ++a)
    for (size_t c = 0; c < P; ++c)
      if (A && a != c) M.at(a, c) = A->to_multipoly(f.reg, a, c);
  for (size_t a = 0; a < P; ++a)
    for (size_t d = 0; d < Q; ++d) {
      MultiPoly bd = B[d].to_multipoly(f.reg, a);
      M.at(a, P + d) = bd;
      M.at(P + d, a) = -bd;
    }
  for (size_t b = 0; b < Q; ++b)
    for (size_t d = 0; d < Q; ++d) M.at(P + b, P + d) = MultiPoly::constant(f.reg, C.at(b, d));
  MultiPoly pf = ring_pfaffian(M, one);
  pf = strip_vandermonde(std::move(pf), 0, P);
  return finish(std::move(pf), f);
}

ExactScalar oracle_det_onesided(const std::vector<PointDerivs>& pts,
                                const std::vector<UniPoly>& B) {
  FlatSpec f = flatten({pts}, {"x"});
  size_t P = f.point.size();
  if (B.size() != P) throw std::invalid_argument("oracle_det_onesided: need P column functions");
  MultiPoly zero(f.reg);
  RingMatrix<MultiPoly> M(P, P, zero);
  for (size_t a = 0; a < P; ++a)
    for (size_t b = 0; b < P; ++b) M.at(a, b) = B[b].to_multipoly(f.reg, a);
  MultiPoly d = ring_det(M);
  d = strip_vandermonde(std::move(d), 0, P);
  return finish(std::move(d), f);
}

ExactScalar oracle_det_twosided(const std::vector<PointDerivs>& xpts,
                                const std::vector<PointDerivs>& ypts, const PolyKernel& B) {
  FlatSpec f = flatten({xpts, ypts}, {"x", "y"});
  size_t P = 0;
  for (const auto& pt : xpts) P += pt.orders.size();
  size_t Py = f.point.size() - P;
  if (Py != P) throw std::invalid_argument("oracle_det_twosided: sides must have equal size");
  MultiPoly zero(f.reg);
  RingMatrix<MultiPoly> M(P, P, zero);
  for (size_t a = 0; a < P; ++a)
    for (size_t b = 0; b < P; ++b) M.at(a, b) = B.to_multipoly(f.reg, a, P + b);
  MultiPoly d = ring_det(M);
  d = strip_vandermonde(std::move(d), 0, P);
  d = strip_vandermonde(std::move(d), P, P);
  return finish(std::move(d), f);
}

ExactScalar oracle_pf(const std::vector<PointDerivs>& pts, const PolyKernel& A) {
  return oracle_pf_general(pts, &A, {}, RingMatrix<ExactScalar>(0, 0, ExactScalar(0)));
}

}  // namespace charderiv
