// Ensemble kernels and closed-form moment polynomials: cross-checks between
// the closed forms, the generic evaluators run on ensemble kernel jets, and
// finite-size versus limiting behaviour.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "charderiv/evaluators.hpp"
#include "charderiv/oracle.hpp"
#include "charderiv/rmt.hpp"
#include "charderiv/special.hpp"

using namespace charderiv;

namespace {

Rational norm2(const ExactScalar& chi) {
  return (chi * chi.conj()).re();
}

std::vector<int> first_order_alpha(int k, int h1, int h2) {
  std::vector<int> a;
  for (int j = 0; j < h2; ++j) a.push_back(2);
  for (int j = 0; j < h1; ++j) a.push_back(1);
  while (static_cast<int>(a.size()) < k) a.push_back(0);
  return a;
}

double as_double(const Rational& r) { return r.get_d(); }

}  // namespace

TEST_CASE("special-function anchors") {
  CHECK(barnes_g(1) == 1);
  CHECK(barnes_g(2) == 1);
  CHECK(barnes_g(3) == 1);
  CHECK(barnes_g(4) == 2);
  CHECK(barnes_g(5) == 12);
  for (long a = 0; a <= 4; ++a)
    for (Rational x : {Rational(1, 2), Rational(-2), Rational(3, 5)})
      CHECK(laguerre_truncated(a, a, x) == laguerre(a, 0, x));
  CHECK(laguerre(2, 1, Rational(0)) == Rational(3));  // C(3,2)
  CHECK(laguerre(1, 0, Rational(1, 2)) == Rational(1, 2));
  auto h3 = hermite_coeffs(3);  // 8x^3 - 12x
  CHECK(h3[3] == 8);
  CHECK(h3[1] == -12);
  CHECK(bessel_i(0, 0.0) == doctest::Approx(1.0));
  CHECK(bessel_i(1, 0.0) == doctest::Approx(0.0));
  CHECK(bessel_i(0, 1.0) == doctest::Approx(1.2660658777520084).epsilon(1e-12));
}

TEST_CASE("Ginibre: general double sum vs one-index closed form") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 3; ++n) {
      auto g = ginibre_moment_general(k, {n});
      auto c = ginibre_moment_one_higher(k, n);
      INFO("k=" << k << " n=" << n);
      CHECK(g == c);
    }
}

TEST_CASE("Ginibre: general double sum vs two-index closed form") {
  for (int k = 2; k <= 3; ++k)
    for (int n1 = 0; n1 <= 4; ++n1)
      for (int n2 = 0; n2 <= n1 && n1 + n2 <= 4; ++n2) {
        auto g = ginibre_moment_general(k, {n1, n2});
        auto c = ginibre_moment_two_higher(k, n1, n2);
        INFO("k=" << k << " n1=" << n1 << " n2=" << n2);
        CHECK(g == c);
        if (n2 == 0) CHECK(c == ginibre_moment_one_higher(k, n1));
      }
}

TEST_CASE("Ginibre: general double sum vs first-derivative closed form") {
  for (int k = 1; k <= 3; ++k)
    for (int h = 0; h <= k; ++h) {
      WeightVector alpha(static_cast<size_t>(k - h), 1);
      auto g = ginibre_moment_general(k, alpha);
      auto c = ginibre_moment_first(k, h);
      INFO("k=" << k << " h=" << h);
      CHECK(g == c);
    }
}

TEST_CASE("Ginibre: polynomial structure") {
  for (int k = 1; k <= 3; ++k) {
    // No derivatives: the normalized moment is the constant 1/G(k+1).
    auto plain = ginibre_moment_general(k, {});
    CHECK(plain.poly == TPoly{{0, Rational(1) / Rational(barnes_g(k + 1))}});
    for (const WeightVector& alpha :
         {WeightVector{2, 1}, WeightVector{1, 1}, WeightVector{3}}) {
      if (static_cast<int>(alpha.size()) > k) continue;
      auto g = ginibre_moment_general(k, alpha);
      long total = 0;
      for (int a : alpha) total += a;
      CHECK(tpoly_degree(g.poly) == total);
      for (const auto& [m, c] : g.poly) CHECK(c >= 0);
      // The top coefficient is universal.
      CHECK(g.poly.at(total) == Rational(1) / Rational(barnes_g(k + 1)));
      // Permutation invariance in the exponent list.
      WeightVector rev(alpha.rbegin(), alpha.rend());
      CHECK(ginibre_moment_general(k, rev) == g);
    }
  }
}

TEST_CASE("Ginibre: limit jet through the generic evaluators") {
  for (const ExactScalar& chi : {rat(1, 2), ExactScalar(Rational(1, 3), Rational(-1, 2))}) {
    Rational t = norm2(chi);
    for (int k = 1; k <= 2; ++k)
      for (const WeightVector& alpha : {WeightVector{1}, WeightVector{2}, WeightVector{2, 1}}) {
        if (static_cast<int>(alpha.size()) > k) continue;
        long total = 0;
        for (int a : alpha) total += a;
        WeightVector padded = alpha;
        padded.resize(static_cast<size_t>(k), 0);
        int ord = static_cast<int>(total) + k - 1;
        Rational expect = tpoly_eval(ginibre_moment_general(k, alpha).poly, t);
        INFO("chi=" << chi.str() << " k=" << k);
        // Kostka route on the payload jet.
        ExactScalar v1 = eval_det_kostka(padded, padded, ginibre_jet(-1, chi, ord, ord));
        CHECK(v1 == ExactScalar(expect));
        // Operator route through the jet-provider determinant evaluator.
        std::vector<PointDerivs> xpts{{chi, std::vector<int>(padded.begin(), padded.end())}};
        std::vector<PointDerivs> ypts{
            {chi.conj(), std::vector<int>(padded.begin(), padded.end())}};
        KernelJetFn fn = [&chi](const ExactScalar&, const ExactScalar&, int o1, int o2) {
          return ginibre_jet(-1, chi, o1, o2);
        };
        CHECK(eval_det_twosided(xpts, ypts, fn) == ExactScalar(expect));
      }
  }
}

TEST_CASE("Ginibre: finite-size jet matches the polynomial kernel") {
  for (long N : {3L, 5L}) {
    PolyKernel K = ginibre_poly_kernel(N);
    for (const ExactScalar& chi : {rat(1, 2), ExactScalar(Rational(1, 2), Rational(1, 3))}) {
      KernelJet a = ginibre_jet(N, chi, 3, 3);
      KernelJet b = K.jet(chi, chi.conj(), 3, 3);
      for (int o1 = 0; o1 <= 3; ++o1)
        for (int o2 = 0; o2 <= 3; ++o2) CHECK(a.deriv(o1, o2) == b.deriv(o1, o2));
    }
  }
}

TEST_CASE("CUE: finite moments against the brute-force oracle") {
  ExactScalar chi = rat(1, 2);
  for (int k = 1; k <= 2; ++k)
    for (int h1 = 0; h1 <= std::min(2, k); ++h1)
      for (long N = 1; N + k <= 6; ++N) {
        auto orders = first_order_alpha(k, h1, 0);
        std::vector<PointDerivs> xpts{{chi, orders}};
        std::vector<PointDerivs> ypts{{chi.conj(), orders}};
        ExactScalar oracle = oracle_det_twosided(xpts, ypts, cue_poly_kernel(N + k));
        INFO("N=" << N << " k=" << k << " h1=" << h1);
        CHECK(cue_finite_moment(N, k, h1, 0, chi) == oracle);
        CHECK(cue_finite_moment_d1_borel(N, k, h1, chi) == oracle);
      }
  // chi = 0 only goes through the generic series route.
  CHECK(cue_finite_moment_d1_borel(2, 2, 1, ExactScalar(0)) ==
        oracle_det_twosided({{ExactScalar(0), {1, 0}}}, {{ExactScalar(0), {1, 0}}},
                            cue_poly_kernel(4)));
  // One second-derivative factor: the four-variable route.
  {
    int k = 2, h2 = 1;
    long N = 3;
    auto orders = first_order_alpha(k, 0, h2);
    ExactScalar xi = ExactScalar(Rational(1, 2), Rational(1, 3));
    std::vector<PointDerivs> xpts{{xi, orders}};
    std::vector<PointDerivs> ypts{{xi.conj(), orders}};
    CHECK(cue_finite_moment(N, k, 0, h2, xi) ==
          oracle_det_twosided(xpts, ypts, cue_poly_kernel(N + k)));
  }
}

TEST_CASE("CUE: finite moments converge to the inside-disc closed form") {
  const long N = 200;
  for (const ExactScalar& chi : {rat(1, 2), ExactScalar(Rational(1, 2), Rational(1, 2))}) {
    Rational t = norm2(chi);
    for (int k = 1; k <= 2; ++k)
      for (int h1 = 0; h1 <= std::min(2, k); ++h1) {
        ExactScalar finite = cue_finite_moment(N, k, h1, 0, chi);
        REQUIRE(finite.is_real());
        double limit = as_double(cue_disc_limit(k, h1, t));
        double rel = std::fabs(as_double(finite.re()) / limit - 1.0);
        INFO("t=" << rational_str(t) << " k=" << k << " h1=" << h1 << " rel=" << rel);
        CHECK(rel < 1e-6);
      }
  }
}

TEST_CASE("CUE: unit-circle scaling limit") {
  // h1 = 0 exact anchor: k = 1 gives det[1/1!] = 1.
  CHECK(cue_circle_limit_d1_exact(1, 0, Rational(0)) == Rational(1));
  // Rescaled finite moments approach the limit at rate O(1/N), so compare the
  // stabilized value extrapolated from the N = 40/80/160 grid, and require the
  // raw deviation itself to shrink monotonically along the grid.
  for (int k = 1; k <= 3; ++k)
    for (int h1 = 0; h1 <= k; ++h1) {
      double limit = cue_circle_limit_d1(k, h1, Rational(0));
      double scaled[3];
      double prev = -1.0;
      int i = 0;
      for (long N : {40L, 80L, 160L}) {
        ExactScalar finite = cue_finite_moment(N, k, h1, 0, ExactScalar(1));
        scaled[i] = as_double(finite.re()) / std::pow(static_cast<double>(N),
                                                      k * k + 2 * h1);
        double rel = std::fabs(scaled[i] / limit - 1.0);
        INFO("k=" << k << " h1=" << h1 << " N=" << N << " rel=" << rel);
        if (prev >= 0.0) CHECK(rel < prev);
        prev = rel;
        ++i;
      }
      double stabilized = (8.0 * scaled[2] - 6.0 * scaled[1] + scaled[0]) / 3.0;
      double rel = std::fabs(stabilized / limit - 1.0);
      INFO("k=" << k << " h1=" << h1 << " stabilized rel=" << rel);
      CHECK(rel < 2e-2);
    }
}
