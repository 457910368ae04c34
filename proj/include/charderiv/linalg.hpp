// Determinants and Pfaffians over exact scalars and over polynomial/series
// rings.
//
// Scalar determinants use exact Gaussian elimination (division by a pivot is
// exact over the rationals).  Ring determinants use cofactor expansion, which
// only needs +, -, *; matrix sizes in this library stay small (<= 8), so the
// factorial cost is irrelevant next to exactness.
//
// Pfaffian convention: Pf of the empty matrix is 1 and Pf [[0, a], [-a, 0]] = a;
// the recursion expands along the first row,
//   Pf(A) = sum_{j=2}^{n} (-1)^j a_{1j} Pf(A with rows/cols 1 and j removed).

#pragma once

#include <stdexcept>
#include <vector>

#include "charderiv/exact.hpp"

namespace charderiv {

template <class R>
class RingMatrix {
 public:
  RingMatrix() : rows_(0), cols_(0) {}
  RingMatrix(size_t rows, size_t cols, const R& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  R& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const R& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

 private:
  size_t rows_, cols_;
  std::vector<R> data_;
};

// Cofactor-expansion determinant for any commutative ring; n >= 1.
template <class R>
R ring_det(const RingMatrix<R>& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("ring_det: need a square matrix of size >= 1");
  size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  // Expand along the first row of the submatrix selected by `cols`.
  struct Rec {
    const RingMatrix<R>& m;
    R go(size_t row, std::vector<size_t>& cols) {
      if (cols.size() == 1) return m.at(row, cols[0]);
      bool started = false;
      R acc = m.at(row, cols[0]);  // placeholder; replaced on first term
      for (size_t jj = 0; jj < cols.size(); ++jj) {
        size_t col = cols[jj];
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t t = 0; t < cols.size(); ++t)
          if (t != jj) rest.push_back(cols[t]);
        R term = m.at(row, col) * go(row + 1, rest);
        if (jj % 2 == 1) term = -term;
        if (!started) {
          acc = std::move(term);
          started = true;
        } else {
          acc += term;
        }
      }
      return acc;
    }
  } rec{m};
  std::vector<size_t> cols(n);
  for (size_t j = 0; j < n; ++j) cols[j] = j;
  return rec.go(0, cols);
}

// Exact elimination determinant for scalar matrices; n >= 1.
ExactScalar det(const RingMatrix<ExactScalar>& m);

template <class R>
bool is_antisymmetric(const RingMatrix<R>& m) {
  if (m.rows() != m.cols()) return false;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = i; j < m.cols(); ++j)
      if (!(m.at(i, j) == -m.at(j, i))) return false;
  return true;
}

// Pfaffian of an antisymmetric matrix of even dimension.  `one` supplies the
// ring identity (needed for the empty matrix and for rings whose default
// constructor cannot make constants, e.g. series tied to a registry).
template <class R>
R ring_pfaffian(const RingMatrix<R>& m, const R& one) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("ring_pfaffian: need an even square matrix");
  if (!is_antisymmetric(m)) throw std::invalid_argument("ring_pfaffian: matrix not antisymmetric");
  struct Rec {
    const RingMatrix<R>& m;
    const R& one;
    R go(std::vector<size_t>& idx) {
      if (idx.empty()) return one;
      if (idx.size() == 2) return m.at(idx[0], idx[1]);
      bool started = false;
      R acc = one;
      for (size_t jj = 1; jj < idx.size(); ++jj) {
        std::vector<size_t> rest;
        rest.reserve(idx.size() - 2);
        for (size_t t = 1; t < idx.size(); ++t)
          if (t != jj) rest.push_back(idx[t]);
        R term = m.at(idx[0], idx[jj]) * go(rest);
        // Row/col 1 and j removed: sign (-1)^j with j the 1-based position.
        if (jj % 2 == 0) term = -term;
        if (!started) {
          acc = std::move(term);
          started = true;
        } else {
          acc += term;
        }
      }
      return acc;
    }
  } rec{m, one};
  std::vector<size_t> idx(m.rows());
  for (size_t j = 0; j < m.rows(); ++j) idx[j] = j;
  return rec.go(idx);
}

ExactScalar pfaffian(const RingMatrix<ExactScalar>& m);

// prod_{a<b} (z_b - z_a); 1 for fewer than two points.
ExactScalar vandermonde(const std::vector<ExactScalar>& z);

}  // namespace charderiv
