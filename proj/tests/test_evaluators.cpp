// Cross-route agreement of the limit evaluators, the combinatorial helper
// sums, and the parallel batch runner against its serial reference.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "charderiv/evaluators.hpp"
#include "charderiv/oracle.hpp"
#include "charderiv/verify.hpp"

using namespace charderiv;

TEST_CASE("multi-sum coefficient basics") {
  // One tuple each: the convolution collapses to a single binomial.
  for (long x = 0; x <= 5; ++x)
    for (long y = 0; y <= 5; ++y)
      CHECK(a_multisum({x}, {y}) == binomial(x + y, x));
  CHECK(a_multisum({}, {}) == 1);
  CHECK(a_multisum({-1}, {2}) == 0);
  // Symmetric in exchanging the two tuple families.
  CHECK(a_multisum({2, 1}, {3}) == a_multisum({3}, {2, 1}));
}

TEST_CASE("signed double-permutation sum") {
  std::vector<long> lhat{0, 2}, nhat{1, 3}, muhat{0, 1}, etahat{2, 4};
  Integer base = a_tilde(lhat, nhat, muhat, etahat);
  // Antisymmetric separately in each index tuple.
  CHECK(a_tilde({2, 0}, nhat, muhat, etahat) == -base);
  CHECK(a_tilde(lhat, {3, 1}, muhat, etahat) == -base);
  CHECK(a_tilde(lhat, nhat, {1, 0}, etahat) == -base);
  CHECK(a_tilde(lhat, nhat, muhat, {4, 2}) == -base);
  // Repeated entries kill the alternating sum.
  CHECK(a_tilde({1, 1}, nhat, muhat, etahat) == 0);
}

TEST_CASE("Pfaffian block embedding of a determinant") {
  // Pf [[0, M], [-M^T, 0]] = (-1)^{n(n-1)/2} det M.
  std::mt19937_64 rng(5u);
  for (size_t n = 1; n <= 4; ++n)
    for (int t = 0; t < 5; ++t) {
      RingMatrix<ExactScalar> m(n, n, ExactScalar(0));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          m.at(i, j) = ExactScalar(static_cast<long>(rng() % 11) - 5);
      RingMatrix<ExactScalar> big(2 * n, 2 * n, ExactScalar(0));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          big.at(i, n + j) = m.at(i, j);
          big.at(n + j, i) = -m.at(i, j);
        }
      ExactScalar sign((n * (n - 1) / 2) % 2 == 0 ? 1 : -1);
      CHECK(pfaffian(big) == sign * det(m));
    }
}

TEST_CASE("Kostka-route determinants are symmetric in the exponent lists") {
  PolyKernel B({{ExactScalar(1), ExactScalar(2), rat(1, 2)},
                {ExactScalar(-1), ExactScalar(3), ExactScalar(1)},
                {rat(1, 3), ExactScalar(0), ExactScalar(2)}});
  ExactScalar chi = rat(1, 2), xi = rat(-1, 3);
  WeightVector alpha{2, 0, 1}, beta{1, 1, 0};
  ExactScalar v = eval_det_kostka(alpha, beta, chi, xi, B);
  WeightVector alpha_p{0, 1, 2}, beta_p{0, 1, 1};
  CHECK(eval_det_kostka(alpha_p, beta_p, chi, xi, B) == v);
  CHECK(v == oracle_det_twosided({{chi, std::vector<int>(alpha.begin(), alpha.end())}},
                                 {{xi, std::vector<int>(beta.begin(), beta.end())}}, B));

  PolyKernel A = PolyKernel::antisymmetrize(
      {{ExactScalar(1), ExactScalar(2)}, {ExactScalar(0), rat(1, 2)}});
  WeightVector gamma{1, 0, 2, 0};
  WeightVector gamma_p{2, 1, 0, 0};
  CHECK(eval_pf_kostka(gamma, chi, A) == eval_pf_kostka(gamma_p, chi, A));
}

TEST_CASE("jet-provider determinant route matches the polynomial route") {
  PolyKernel B({{ExactScalar(2), rat(-1, 2)}, {ExactScalar(1), ExactScalar(3)}});
  std::vector<PointDerivs> xpts{{rat(1, 3), {1, 2}}};
  std::vector<PointDerivs> ypts{{ExactScalar(-1), {0, 1}}};
  KernelJetFn fn = [&B](const ExactScalar& x, const ExactScalar& y, int o1, int o2) {
    return B.jet(x, y, o1, o2);
  };
  CHECK(eval_det_twosided(xpts, ypts, fn) == eval_det_twosided(xpts, ypts, B));
}

TEST_CASE("cross-verification batch passes and parallel matches serial") {
  VerifyOptions opt;
  opt.seed = 7;
  opt.max_k = 3;
  opt.cases = 30;
  auto serial = run_cross_suite_serial(opt);
  auto parallel = run_cross_suite(opt);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    INFO(serial[i].name << " " << serial[i].detail);
    CHECK(serial[i].pass);
    CHECK(serial[i].name == parallel[i].name);
    CHECK(serial[i].pass == parallel[i].pass);
    CHECK(serial[i].detail == parallel[i].detail);
  }
}

TEST_CASE("antisymmetry breach is rejected") {
  PolyKernel notskew({{ExactScalar(1), ExactScalar(2)}, {ExactScalar(3), ExactScalar(4)}});
  std::vector<PointDerivs> pts{{rat(1, 2), {0, 0}}};
  RingMatrix<ExactScalar> C0(0, 0, ExactScalar(0));
  CHECK_THROWS(eval_pf_main(pts, notskew, {}, C0));
}
