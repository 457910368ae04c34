#include "charderiv/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "charderiv/evaluators.hpp"
#include "charderiv/oracle.hpp"

#ifdef CHARDERIV_HAVE_OPENMP
#include <omp.h>
#endif

namespace charderiv {

namespace {

using Rng = std::mt19937_64;

long rint(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

ExactScalar rpoint(Rng& rng) {
  long num = rint(rng, -3, 3);
  long den = rint(rng, 1, 3);
  Rational r(num, den);
  r.canonicalize();
  return ExactScalar(r);
}

ExactScalar rpoint_distinct(Rng& rng, const ExactScalar& other) {
  ExactScalar p = rpoint(rng);
  while (p == other) p = rpoint(rng);
  return p;
}

// Weight vector of length k with total at most cap.
WeightVector rweights(Rng& rng, int k, int cap) {
  WeightVector w(static_cast<size_t>(k), 0);
  long total = rint(rng, 0, cap);
  for (long t = 0; t < total; ++t) w[static_cast<size_t>(rint(rng, 0, k - 1))] += 1;
  return w;
}

std::vector<std::vector<ExactScalar>> rtable(Rng& rng, int deg) {
  std::vector<std::vector<ExactScalar>> c(
      static_cast<size_t>(deg) + 1,
      std::vector<ExactScalar>(static_cast<size_t>(deg) + 1, ExactScalar(0)));
  for (auto& row : c)
    for (auto& v : row) v = ExactScalar(rint(rng, -5, 5));
  return c;
}

PolyKernel rkernel(Rng& rng, int deg) { return PolyKernel(rtable(rng, deg)); }

PolyKernel rskew_kernel(Rng& rng, int deg) {
  return PolyKernel::antisymmetrize(rtable(rng, deg));
}

UniPoly rpoly(Rng& rng, int deg) {
  std::vector<ExactScalar> c(static_cast<size_t>(deg) + 1);
  for (auto& v : c) v = ExactScalar(rint(rng, -5, 5));
  return UniPoly(std::move(c));
}

struct RouteValues {
  std::vector<std::pair<std::string, ExactScalar>> v;
  void add(const std::string& name, const ExactScalar& x) { v.emplace_back(name, x); }
};

void finish_case(VerifyCaseResult& res, const RouteValues& routes) {
  res.pass = true;
  for (size_t i = 1; i < routes.v.size(); ++i)
    if (!(routes.v[i].second == routes.v[0].second)) res.pass = false;
  if (!res.pass) {
    std::ostringstream os;
    for (const auto& [name, value] : routes.v) os << name << "=" << value.str() << " ";
    res.detail = os.str();
  }
}

}  // namespace

VerifyCaseResult run_cross_case(const VerifyOptions& options, int index) {
  VerifyCaseResult res;
  Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) + 1);
  int kind = index % 6;
  std::ostringstream name;
  name << "case " << index;
  try {
    RouteValues routes;
    int max_k = std::max(1, std::min(options.max_k, 3));
    switch (kind) {
      case 0: {  // two-sided determinant, one merging point per side
        int k = static_cast<int>(rint(rng, 1, max_k));
        name << " det L=1 k=" << k;
        WeightVector alpha = rweights(rng, k, 4);
        WeightVector beta = rweights(rng, k, 4);
        ExactScalar chi = rpoint(rng), xi = rpoint(rng);
        PolyKernel B = rkernel(rng, static_cast<int>(rint(rng, 2, 6)));
        std::vector<PointDerivs> xpts{{chi, std::vector<int>(alpha.begin(), alpha.end())}};
        std::vector<PointDerivs> ypts{{xi, std::vector<int>(beta.begin(), beta.end())}};
        routes.add("oracle", oracle_det_twosided(xpts, ypts, B));
        routes.add("operator", eval_det_twosided(xpts, ypts, B));
        routes.add("kostka", eval_det_kostka(alpha, beta, chi, xi, B));
        break;
      }
      case 1: {  // two-sided determinant, two merging points per side
        int P = static_cast<int>(rint(rng, 2, max_k));
        name << " det L=2 P=" << P;
        auto side = [&](std::vector<PointDerivs>& pts) {
          int p1 = static_cast<int>(rint(rng, 1, P - 1));
          ExactScalar c1 = rpoint(rng);
          ExactScalar c2 = rpoint_distinct(rng, c1);
          std::vector<int> o1, o2;
          for (int i = 0; i < p1; ++i) o1.push_back(static_cast<int>(rint(rng, 0, 2)));
          for (int i = 0; i < P - p1; ++i) o2.push_back(static_cast<int>(rint(rng, 0, 2)));
          pts = {{c1, o1}, {c2, o2}};
        };
        std::vector<PointDerivs> xpts, ypts;
        side(xpts);
        side(ypts);
        PolyKernel B = rkernel(rng, static_cast<int>(rint(rng, 2, 6)));
        routes.add("oracle", oracle_det_twosided(xpts, ypts, B));
        routes.add("operator", eval_det_twosided(xpts, ypts, B));
        break;
      }
      case 2: {  // Pfaffian, one merging point
        int n = (rint(rng, 0, 1) == 0) ? 2 : 4;
        name << " pf L=1 n=" << n;
        WeightVector alpha = rweights(rng, n, 4);
        ExactScalar chi = rpoint(rng);
        PolyKernel A = rskew_kernel(rng, static_cast<int>(rint(rng, 2, 6)));
        std::vector<PointDerivs> pts{{chi, std::vector<int>(alpha.begin(), alpha.end())}};
        RingMatrix<ExactScalar> C0(0, 0, ExactScalar(0));
        routes.add("oracle", oracle_pf(pts, A));
        routes.add("operator", eval_pf_main(pts, A, {}, C0));
        routes.add("kostka", eval_pf_kostka(alpha, chi, A));
        break;
      }
      case 3: {  // Pfaffian, two merging points with mirrored orders
        int k = static_cast<int>(rint(rng, 1, 2));
        name << " pf two-point k=" << k;
        WeightVector alpha = rweights(rng, k, 4);
        ExactScalar chi = rpoint(rng);
        ExactScalar xi = rpoint_distinct(rng, chi);
        PolyKernel A = rskew_kernel(rng, static_cast<int>(rint(rng, 2, 6)));
        std::vector<int> orders(alpha.begin(), alpha.end());
        std::vector<PointDerivs> pts{{chi, orders}, {xi, orders}};
        RingMatrix<ExactScalar> C0(0, 0, ExactScalar(0));
        routes.add("oracle", oracle_pf(pts, A));
        routes.add("operator", eval_pf_main(pts, A, {}, C0));
        routes.add("kostka", eval_pf_twopoint_kostka(alpha, chi, xi, A));
        break;
      }
      case 4: {  // Pfaffian with function and constant blocks
        int P = static_cast<int>(rint(rng, 1, max_k));
        int Q = 2 - (P % 2);
        name << " pf blocks P=" << P << " Q=" << Q;
        WeightVector alpha = rweights(rng, P, 4);
        ExactScalar chi = rpoint(rng);
        PolyKernel A = rskew_kernel(rng, static_cast<int>(rint(rng, 2, 5)));
        std::vector<UniPoly> B;
        for (int q = 0; q < Q; ++q) B.push_back(rpoly(rng, static_cast<int>(rint(rng, 2, 6))));
        RingMatrix<ExactScalar> C(static_cast<size_t>(Q), static_cast<size_t>(Q),
                                  ExactScalar(0));
        for (int a = 0; a < Q; ++a)
          for (int b = a + 1; b < Q; ++b) {
            ExactScalar v(rint(rng, -5, 5));
            C.at(static_cast<size_t>(a), static_cast<size_t>(b)) = v;
            C.at(static_cast<size_t>(b), static_cast<size_t>(a)) = -v;
          }
        std::vector<PointDerivs> pts{{chi, std::vector<int>(alpha.begin(), alpha.end())}};
        routes.add("oracle", oracle_pf_general(pts, &A, B, C));
        routes.add("operator", eval_pf_main(pts, A, B, C));
        break;
      }
      default: {  // first-derivative determinants, all applicable routes
        int k = static_cast<int>(rint(rng, 1, max_k));
        int h = static_cast<int>(rint(rng, 0, k));
        name << " det first-order k=" << k << " h=" << h;
        ExactScalar chi = rpoint(rng), xi = rpoint(rng);
        WeightVector alpha(static_cast<size_t>(k), 0);
        for (int j = 0; j < k - h; ++j) alpha[static_cast<size_t>(j)] = 1;
        std::vector<int> orders(alpha.begin(), alpha.end());
        std::vector<PointDerivs> xpts{{chi, orders}};
        std::vector<PointDerivs> ypts{{xi, orders}};
        std::vector<UniPoly> B;
        for (int b = 0; b < k; ++b) B.push_back(rpoly(rng, static_cast<int>(rint(rng, 2, 6))));
        routes.add("oracle1", oracle_det_onesided(xpts, B));
        routes.add("operator1", eval_det_onesided(xpts, B));
        routes.add("multinomial1", eval_det_first_order_onesided(k, h, chi, B));
        routes.add("borel1", eval_det_borel_onesided(k, h, chi, B));
        finish_case(res, routes);
        if (!res.pass) break;
        RouteValues routes2;
        PolyKernel K2 = rkernel(rng, static_cast<int>(rint(rng, 2, 6)));
        routes2.add("oracle2", oracle_det_twosided(xpts, ypts, K2));
        routes2.add("operator2", eval_det_twosided(xpts, ypts, K2));
        routes2.add("kostka2", eval_det_kostka(alpha, alpha, chi, xi, K2));
        routes2.add("multinomial2", eval_det_first_order_twosided(k, h, chi, xi, K2));
        routes2.add("borel2", eval_det_borel_twosided(k, h, chi, xi, K2));
        routes = routes2;
        break;
      }
    }
    finish_case(res, routes);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.name = name.str();
  return res;
}

std::vector<VerifyCaseResult> run_cross_suite_serial(const VerifyOptions& options) {
  std::vector<VerifyCaseResult> results(static_cast<size_t>(options.cases));
  for (int i = 0; i < options.cases; ++i) results[static_cast<size_t>(i)] =
      run_cross_case(options, i);
  return results;
}

int verify_thread_count() {
#ifdef CHARDERIV_HAVE_OPENMP
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("CHARDERIV_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
#else
  return 1;
#endif
}

std::vector<VerifyCaseResult> run_cross_suite(const VerifyOptions& options) {
  std::vector<VerifyCaseResult> results(static_cast<size_t>(options.cases));
#ifdef CHARDERIV_HAVE_OPENMP
  int threads = verify_thread_count();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < options.cases; ++i)
    results[static_cast<size_t>(i)] = run_cross_case(options, i);
#else
  for (int i = 0; i < options.cases; ++i)
    results[static_cast<size_t>(i)] = run_cross_case(options, i);
#endif
  return results;
}

}  // namespace charderiv
