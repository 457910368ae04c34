// Determinants, Pfaffians, and Vandermonde products.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charderiv/linalg.hpp"

using namespace charderiv;

namespace {

using Mat = RingMatrix<ExactScalar>;

Mat random_matrix(std::mt19937_64& rng, size_t n) {
  Mat m(n, n, ExactScalar(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m.at(i, j) = ExactScalar(static_cast<long>(rng() % 11) - 5);
  return m;
}

Mat random_skew(std::mt19937_64& rng, size_t n) {
  Mat m(n, n, ExactScalar(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      ExactScalar v(static_cast<long>(rng() % 11) - 5);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat r(a.rows(), b.cols(), ExactScalar(0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      for (size_t l = 0; l < a.cols(); ++l) r.at(i, j) += a.at(i, l) * b.at(l, j);
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.cols(), a.rows(), ExactScalar(0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

}  // namespace

TEST_CASE("determinant anchors") {
  Mat m(2, 2, ExactScalar(0));
  m.at(0, 0) = rat(1, 2);
  m.at(0, 1) = ExactScalar(3);
  m.at(1, 0) = rat(-1, 3);
  m.at(1, 1) = ExactScalar(4);
  CHECK(det(m) == ExactScalar(3));
  CHECK(ring_det(m) == ExactScalar(3));
  Mat s(3, 3, ExactScalar(0));  // singular: two equal rows
  s.at(0, 0) = ExactScalar(1);
  s.at(1, 0) = ExactScalar(1);
  CHECK(det(s) == ExactScalar(0));
}

TEST_CASE("elimination and cofactor determinants agree") {
  std::mt19937_64 rng(11u);
  for (size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      Mat m = random_matrix(rng, n);
      CHECK(det(m) == ring_det(m));
    }
}

TEST_CASE("Pfaffian anchor and convention") {
  Mat m(2, 2, ExactScalar(0));
  ExactScalar a = rat(5, 7);
  m.at(0, 1) = a;
  m.at(1, 0) = -a;
  CHECK(pfaffian(m) == a);
  Mat empty(0, 0, ExactScalar(0));
  CHECK(pfaffian(empty) == ExactScalar(1));
  Mat odd(3, 3, ExactScalar(0));
  CHECK_THROWS(pfaffian(odd));
  Mat notskew(2, 2, ExactScalar(1));
  CHECK_THROWS(pfaffian(notskew));
}

TEST_CASE("Pfaffian squared equals determinant") {
  std::mt19937_64 rng(23u);
  int trials = 0;
  for (size_t n = 2; n <= 8 && trials < 50; n += 2)
    for (int t = 0; t < 13 && trials < 50; ++t, ++trials) {
      Mat m = random_skew(rng, n);
      ExactScalar pf = pfaffian(m);
      CHECK(pf * pf == det(m));
    }
}

TEST_CASE("Pfaffian congruence covariance") {
  std::mt19937_64 rng(31u);
  for (size_t n : {2u, 4u, 6u})
    for (int t = 0; t < 5; ++t) {
      Mat a = random_skew(rng, n);
      Mat b = random_matrix(rng, n);
      CHECK(pfaffian(mul(transpose(b), mul(a, b))) == det(b) * pfaffian(a));
    }
}

TEST_CASE("Vandermonde product") {
  std::vector<ExactScalar> z{ExactScalar(1), ExactScalar(3), rat(1, 2)};
  // (3-1)(1/2-1)(1/2-3) = 2 * (-1/2) * (-5/2) = 5/2.
  CHECK(vandermonde(z) == rat(5, 2));
  CHECK(vandermonde({}) == ExactScalar(1));
  CHECK(vandermonde({ExactScalar(7)}) == ExactScalar(1));
  // Matches the alternant determinant det[z_a^b].
  Mat m(3, 3, ExactScalar(0));
  for (size_t aa = 0; aa < 3; ++aa)
    for (int b = 0; b < 3; ++b) m.at(aa, static_cast<size_t>(b)) = z[aa].pow(b);
  CHECK(det(m) == vandermonde(z));
}
