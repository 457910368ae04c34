#include "charderiv/linalg.hpp"

namespace charderiv {

ExactScalar det(const RingMatrix<ExactScalar>& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("det: need a square matrix of size >= 1");
  size_t n = m.rows();
  std::vector<std::vector<ExactScalar>> a(n, std::vector<ExactScalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  ExactScalar result(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return ExactScalar(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      result = -result;
    }
    result *= a[col][col];
    ExactScalar inv = a[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      ExactScalar f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return result;
}

ExactScalar pfaffian(const RingMatrix<ExactScalar>& m) {
  return ring_pfaffian(m, ExactScalar(1));
}

ExactScalar vandermonde(const std::vector<ExactScalar>& z) {
  ExactScalar r(1);
  for (size_t a = 0; a < z.size(); ++a)
    for (size_t b = a + 1; b < z.size(); ++b) r *= z[b] - z[a];
  return r;
}

}  // namespace charderiv
