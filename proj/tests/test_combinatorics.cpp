// Partitions, Kostka numbers, Schur values, and the first-order
// composition-to-partition determinant identity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charderiv/combinatorics.hpp"
#include "charderiv/linalg.hpp"

using namespace charderiv;

TEST_CASE("partition and composition enumeration") {
  auto p4 = partitions(4, 4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
  CHECK(partitions(4, 2).size() == 3);       // 4, 31, 22
  CHECK(partitions(4, 4, 2).size() == 3);    // 22, 211, 1111
  CHECK(partitions(0, 3).size() == 1);
  CHECK(partitions(0, 3).front().empty());
  auto c = compositions(3, 2);
  REQUIRE(c.size() == 4);
  CHECK(c.front() == WeightVector{0, 3});
  CHECK(c.back() == WeightVector{3, 0});
  CHECK(compositions(5, 3).size() == 21);
}

TEST_CASE("shifted sequences and factorials") {
  // lambda = (3,1), k = 3: padded (3,1,0) -> lhat = (0, 2, 5).
  CHECK(shifted_sequence({3, 1}, 3) == std::vector<long>{0, 2, 5});
  CHECK(shifted_sequence({}, 3) == std::vector<long>{0, 1, 2});
  CHECK(sequence_factorial({0, 2, 5}) == Rational(240));
  CHECK(inv_factorial_or_zero(4) == Rational(1, 24));
  CHECK(inv_factorial_or_zero(-1) == Rational(0));
}

TEST_CASE("anchor Kostka value and invariances") {
  CHECK(kostka({3, 1}, {2, 1, 1}) == 2);
  CHECK(kostka({3, 1}, {1, 2, 1}) == 2);  // content permutation invariance
  CHECK(kostka({3, 1}, {1, 1, 2}) == 2);
  CHECK(kostka({2, 2}, {2, 1, 1}) == 1);
  CHECK(kostka({2, 1}, {1, 1}) == 0);     // size mismatch
  CHECK(kostka({2, 2}, {3, 1}) == 0);     // dominance violation
  CHECK(kostka({4}, {4}) == 1);
}

TEST_CASE("Kostka agrees with brute-force tableau count") {
  for (int m = 1; m <= 6; ++m)
    for (const auto& lambda : partitions(m, m))
      for (int n = 1; n <= std::min(m, 4); ++n)
        for (const auto& alpha : compositions(m, n))
          CHECK(kostka(lambda, alpha) == kostka_bruteforce(lambda, alpha));
}

TEST_CASE("standard tableau counts: hooks vs shifted vs brute force") {
  for (int m = 1; m <= 6; ++m)
    for (const auto& lambda : partitions(m, m)) {
      Integer hooks = kostka_ones_hooks(lambda);
      Integer shifted = kostka_ones_shifted(lambda);
      WeightVector ones(static_cast<size_t>(m), 1);
      Integer ssyt = kostka_bruteforce(lambda, ones);
      CHECK(hooks == shifted);
      CHECK(hooks == ssyt);
    }
}

TEST_CASE("Schur value: bialternant vs Kostka monomial sum") {
  std::vector<ExactScalar> u{rat(1, 2), rat(-1, 3), ExactScalar(2)};
  for (int m = 1; m <= 5; ++m)
    for (const auto& lambda : partitions(m, 3))
      CHECK(schur_eval_bialternant(lambda, u) == schur_eval_kostka(lambda, u));
  // Repeated points only make sense on the monomial route.
  std::vector<ExactScalar> v{ExactScalar(1), ExactScalar(1)};
  CHECK(schur_eval_kostka({2}, v) == ExactScalar(3));  // x^2+xy+y^2 at (1,1)
}

TEST_CASE("factorial Schur values") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& lambda : partitions(4, k)) {
      // Empty index normalizes to 1.
      CHECK(factorial_schur({}, lambda, k) == Rational(1));
      // Integrality for all nu with |nu| <= 4.
      for (int m = 1; m <= 4; ++m)
        for (const auto& nu : partitions(m, k)) {
          Rational t = factorial_schur(nu, lambda, k);
          CHECK(t.get_den() == 1);
        }
    }
}

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial(4, {2, 1, 1}) == 12);
  CHECK(multinomial(3, {3}) == 1);
  CHECK(multinomial(0, {0, 0}) == 1);
}

namespace {

// Both sides of the first-order identity on an arbitrary value table
// u[b][n], b = 0..k-1, n = 0..2k-1.
ExactScalar first_order_lhs(int k, const std::vector<std::vector<ExactScalar>>& u) {
  ExactScalar acc(0);
  for (const auto& r : compositions(k, k)) {
    RingMatrix<ExactScalar> m(static_cast<size_t>(k), static_cast<size_t>(k), ExactScalar(0));
    Rational denom(1);
    for (int a = 0; a < k; ++a) {
      long idx = r[static_cast<size_t>(a)] + a;
      denom *= factorial(idx);
      for (int b = 0; b < k; ++b)
        m.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
            u[static_cast<size_t>(b)][static_cast<size_t>(idx)];
    }
    acc += det(m) * ExactScalar(Rational(multinomial(k, r)) / denom);
  }
  return acc;
}

ExactScalar first_order_rhs(int k, const std::vector<std::vector<ExactScalar>>& u) {
  ExactScalar acc(0);
  for (const auto& lambda : partitions(k, k)) {
    auto lhat = shifted_sequence(lambda, k);
    RingMatrix<ExactScalar> m(static_cast<size_t>(k), static_cast<size_t>(k), ExactScalar(0));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        m.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
            u[static_cast<size_t>(b)][static_cast<size_t>(lhat[static_cast<size_t>(a)])];
    acc += det(m) *
           ExactScalar(Rational(kostka_ones_shifted(lambda)) / sequence_factorial(lhat));
  }
  return acc;
}

}  // namespace

TEST_CASE("first-order composition sum equals Kostka partition sum") {
  // The identity behind the first-derivative evaluator: for any values
  // u_{b,n}, the multinomial sum over compositions of k collapses to the
  // partition sum weighted by standard-tableau counts.  Here the index a+1
  // is offset so row a reads u at r_a + a - 1 (0-based: r_a + a).
  std::mt19937_64 rng(20260823u);
  auto rv = [&rng]() {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 3);
    Rational r(num, den);
    r.canonicalize();
    return ExactScalar(r);
  };
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + trial % 4;
    std::vector<std::vector<ExactScalar>> u(
        static_cast<size_t>(k), std::vector<ExactScalar>(2 * static_cast<size_t>(k)));
    for (auto& row : u)
      for (auto& v : row) v = rv();
    CHECK(first_order_lhs(k, u) == first_order_rhs(k, u));
  }
}
