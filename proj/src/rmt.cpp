#include "charderiv/rmt.hpp"

#include <algorithm>
#include <stdexcept>

#include "charderiv/diffop.hpp"
#include "charderiv/linalg.hpp"
#include "charderiv/series.hpp"
#include "charderiv/special.hpp"

namespace charderiv {

namespace {

Rational rational_pow(const Rational& base, long n) {
  if (n < 0) {
    if (sgn(base) == 0) throw std::invalid_argument("rational_pow: zero base, negative power");
    return rational_pow(Rational(1) / base, -n);
  }
  Rational acc(1);
  Rational b = base;
  for (long e = n; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    b *= b;
  }
  acc.canonicalize();
  return acc;
}

Rational inv_fact(long n) {
  Rational r(Integer(1), factorial(n));
  r.canonicalize();
  return r;
}

// prod_{a<b} (lhat_b - lhat_a) for an increasing sequence.
Integer shifted_vandermonde(const std::vector<long>& lhat) {
  Integer prod(1);
  for (size_t a = 0; a < lhat.size(); ++a)
    for (size_t b = a + 1; b < lhat.size(); ++b) prod *= Integer(lhat[b] - lhat[a]);
  return prod;
}

void tpoly_add(TPoly& p, long m, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational& slot = p[m];
  slot += c;
  slot.canonicalize();
  if (sgn(slot) == 0) p.erase(m);
}

}  // namespace

bool operator==(const GinibreMomentResult& a, const GinibreMomentResult& b) {
  return a.k == b.k && a.poly == b.poly;
}

Rational tpoly_eval(const TPoly& p, const Rational& t) {
  Rational acc(0);
  for (const auto& [m, c] : p) acc += c * rational_pow(t, m);
  acc.canonicalize();
  return acc;
}

long tpoly_degree(const TPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

// ---- Ginibre -------------------------------------------------------------

KernelJet ginibre_jet(long N, const ExactScalar& chi, int order1, int order2) {
  if (order1 < 0 || order2 < 0) throw std::invalid_argument("ginibre_jet: negative order");
  KernelJet jet;
  jet.p1 = chi;
  jet.p2 = chi.conj();
  jet.c.assign(static_cast<size_t>(order1) + 1,
               std::vector<ExactScalar>(static_cast<size_t>(order2) + 1, ExactScalar(0)));
  const ExactScalar chib = chi.conj();
  if (N < 0) {
    // Limit kernel payload (true kernel e^{x y} / pi; the factor
    // e^{|chi|^2} / pi is implicit per entry):
    //   c_ab = sum_r chi^{b-r} chib^{a-r} / ((a-r)! (b-r)! r!).
    for (int a = 0; a <= order1; ++a)
      for (int b = 0; b <= order2; ++b) {
        ExactScalar acc(0);
        for (int r = 0; r <= std::min(a, b); ++r) {
          Rational f = inv_fact(a - r) * inv_fact(b - r) * inv_fact(r);
          f.canonicalize();
          acc += chi.pow(b - r) * chib.pow(a - r) * ExactScalar(f);
        }
        jet.c[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc;
      }
    return jet;
  }
  // Finite payload of (1/pi) sum_{j<N} (x y)^j / j! with the 1/pi implicit:
  //   c_ab = sum_{j<N} C(j,a) C(j,b) chi^{j-a} chib^{j-b} / j!.
  for (int a = 0; a <= order1; ++a)
    for (int b = 0; b <= order2; ++b) {
      ExactScalar acc(0);
      for (long j = std::max(a, b); j < N; ++j) {
        Rational f = Rational(binomial(j, a) * binomial(j, b), factorial(j));
        f.canonicalize();
        acc += chi.pow(j - a) * chib.pow(j - b) * ExactScalar(f);
      }
      jet.c[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc;
    }
  return jet;
}

PolyKernel ginibre_poly_kernel(long N) {
  if (N < 1) throw std::invalid_argument("ginibre_poly_kernel: N must be >= 1");
  std::vector<std::vector<ExactScalar>> c(
      static_cast<size_t>(N), std::vector<ExactScalar>(static_cast<size_t>(N), ExactScalar(0)));
  for (long j = 0; j < N; ++j) c[static_cast<size_t>(j)][static_cast<size_t>(j)] =
      ExactScalar(inv_fact(j));
  return PolyKernel(std::move(c));
}

GinibreMomentResult ginibre_moment_general(int k, WeightVector alpha) {
  if (k < 1) throw std::invalid_argument("ginibre_moment_general: k must be >= 1");
  if (static_cast<int>(alpha.size()) > k)
    throw std::invalid_argument("ginibre_moment_general: alpha has more than k entries");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("ginibre_moment_general: negative derivative order");
  alpha.resize(static_cast<size_t>(k), 0);
  long m = 0;
  for (int a : alpha) m += a;

  Rational afact(1);
  for (int a : alpha) afact *= Rational(factorial(a));

  GinibreMomentResult res;
  res.k = k;
  for (long mm = 0; mm <= m; ++mm) {
    Rational cm(0);
    for (const auto& nu : partitions(static_cast<int>(m - mm), k)) {
      auto nuhat = shifted_sequence(nu, k);
      Rational inner(0);
      for (const auto& lambda : partitions(static_cast<int>(m), k)) {
        Integer kv = kostka(lambda, alpha);
        if (sgn(kv) == 0) continue;
        auto lhat = shifted_sequence(lambda, k);
        Rational w = Rational(kv * shifted_vandermonde(lhat)) / sequence_factorial(lhat);
        inner += w * factorial_schur(nu, lambda, k);
      }
      inner.canonicalize();
      cm += inner * inner / sequence_factorial(nuhat);
    }
    cm *= afact * afact;
    cm.canonicalize();
    tpoly_add(res.poly, mm, cm);
  }
  return res;
}

GinibreMomentResult ginibre_moment_first(int k, int h) {
  if (k < 1 || h < 0 || h > k)
    throw std::invalid_argument("ginibre_moment_first: need 0 <= h <= k");
  int l = k - h;
  GinibreMomentResult res;
  res.k = k;
  Rational base = Rational(1) / (Rational(factorial(l) * factorial(l)) *
                                 Rational(barnes_g(static_cast<long>(h) + 1)));
  base.canonicalize();
  for (int m = 0; m <= l - 2; ++m) {
    Rational cm(0);
    for (const auto& nu : partitions(l - m, l)) {
      // Denominator prod_{j=1}^{l} (nu_j + k - j)! with nu padded to l parts.
      Rational den(1);
      for (int j = 1; j <= l; ++j) {
        long part = (j <= static_cast<int>(nu.size())) ? nu[static_cast<size_t>(j - 1)] : 0;
        den *= Rational(factorial(part + k - j));
      }
      Rational inner(0);
      for (const auto& lambda : partitions(l, l)) {
        Integer kv = kostka_ones_shifted(lambda);
        inner += Rational(kv * kv) * factorial_schur(nu, lambda, l);
      }
      inner.canonicalize();
      cm += inner * inner / den;
    }
    cm *= base;
    cm.canonicalize();
    tpoly_add(res.poly, m, cm);
  }
  Rational gk1(barnes_g(static_cast<long>(k) + 1));
  if (l >= 1) {
    Rational c1 = Rational(static_cast<long>(l) * l) / (Rational(k) * gk1);
    c1.canonicalize();
    tpoly_add(res.poly, l - 1, c1);
  }
  Rational c0 = Rational(1) / gk1;
  c0.canonicalize();
  tpoly_add(res.poly, l, c0);
  return res;
}

GinibreMomentResult ginibre_moment_one_higher(int k, int n) {
  if (k < 1 || n < 0)
    throw std::invalid_argument("ginibre_moment_one_higher: need k >= 1, n >= 0");
  GinibreMomentResult res;
  res.k = k;
  Rational pref = Rational(factorial(n) * factorial(n)) /
                  (Rational(factorial(n + k - 1)) * Rational(barnes_g(k)));
  pref.canonicalize();
  for (int m = 0; m <= n; ++m) {
    Rational c = pref * Rational(binomial(n + k - 1, m)) * inv_fact(m);
    c.canonicalize();
    tpoly_add(res.poly, m, c);
  }
  return res;
}

GinibreMomentResult ginibre_moment_two_higher(int k, int n1, int n2) {
  if (k < 2 || n2 < 0 || n1 < n2)
    throw std::invalid_argument("ginibre_moment_two_higher: need k >= 2, n1 >= n2 >= 0");
  GinibreMomentResult res;
  res.k = k;
  Rational pref = Rational(factorial(n1) * factorial(n1) * factorial(n2) * factorial(n2)) /
                  Rational(barnes_g(static_cast<long>(k) - 1));
  pref.canonicalize();
  long s12 = static_cast<long>(n1) + n2;
  for (long m = 0; m <= s12; ++m) {
    Rational cm(0);
    for (long r = 0; 2 * r <= s12 - m; ++r) {
      Integer bracket(0);
      for (long s = 0; s <= n2; ++s)
        bracket += binomial(m, s - r) - binomial(m, s12 - s - r + 1);
      if (sgn(bracket) == 0) continue;
      Rational term = Rational(bracket * bracket) /
                      Rational(factorial(r + k - 2) * factorial(s12 - m - r + k - 1));
      cm += term;
    }
    cm *= pref * inv_fact(m) * inv_fact(m);
    cm.canonicalize();
    tpoly_add(res.poly, m, cm);
  }
  return res;
}

// ---- CUE -----------------------------------------------------------------

KernelJet cue_jet(long N, const ExactScalar& chi, int order1, int order2) {
  if (N < 0 || order1 < 0 || order2 < 0)
    throw std::invalid_argument("cue_jet: negative argument");
  KernelJet jet;
  jet.p1 = chi;
  jet.p2 = chi.conj();
  jet.c.assign(static_cast<size_t>(order1) + 1,
               std::vector<ExactScalar>(static_cast<size_t>(order2) + 1, ExactScalar(0)));
  const ExactScalar chib = chi.conj();
  for (int a = 0; a <= order1; ++a)
    for (int b = 0; b <= order2; ++b) {
      ExactScalar acc(0);
      for (long j = std::max(a, b); j < N; ++j)
        acc += ExactScalar(Integer(binomial(j, a) * binomial(j, b))) * chi.pow(j - a) * chib.pow(j - b);
      jet.c[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc;
    }
  return jet;
}

PolyKernel cue_poly_kernel(long N) {
  if (N < 1) throw std::invalid_argument("cue_poly_kernel: N must be >= 1");
  std::vector<std::vector<ExactScalar>> c(
      static_cast<size_t>(N), std::vector<ExactScalar>(static_cast<size_t>(N), ExactScalar(0)));
  for (long j = 0; j < N; ++j)
    c[static_cast<size_t>(j)][static_cast<size_t>(j)] = ExactScalar(1);
  return PolyKernel(std::move(c));
}

namespace {

void cue_check_args(long N, int k, int h1, int h2) {
  if (N < 1 || k < 1 || h1 < 0 || h2 < 0 || h1 + h2 > k)
    throw std::invalid_argument("cue_finite_moment: need N >= 1, k >= 1, 0 <= h1 + h2 <= k");
}

}  // namespace

ExactScalar cue_finite_moment(long N, int k, int h1, int h2, const ExactScalar& chi) {
  cue_check_args(N, k, h1, h2);
  const ExactScalar chib = chi.conj();
  if (h2 == 0) {
    if (chi.is_zero())
      return cue_finite_moment_d1_borel(N, k, h1, chi);
    // First-derivative route: series entries built from generalised Laguerre
    // expansions of the doubly Borel-transformed kernel of index N + k,
    //   entry_ab = sum_l chi^{l-a+1} chib^{l-b+1}
    //              L_{l-a+1}^{(a-1)}(-u/chi) L_{l-b+1}^{(b-1)}(-v/chib),
    // truncated at degree h1 in each variable.
    RegistryPtr reg = VarRegistry::make({"u", "v"});
    auto pol = std::make_shared<TruncPolicy>();
    pol->weight = {1, 1};
    pol->group = {0, 1};
    pol->cap = {h1, h1};
    PolicyPtr policy(pol);
    const ExactScalar minus_inv_chi = -chi.inverse();
    const ExactScalar minus_inv_chib = -chib.inverse();
    // Coefficient of u^i in L_p^{(q)}(scale * u): (-1)^i C(p+q, p-i) scale^i / i!.
    auto lag_coeffs = [](long p, long q, const ExactScalar& scale, int cap) {
      std::vector<ExactScalar> c(static_cast<size_t>(cap) + 1, ExactScalar(0));
      for (int i = 0; i <= cap && i <= p; ++i) {
        ExactScalar v = ExactScalar(Rational(binomial(p + q, p - i))) * scale.pow(i) *
                        ExactScalar(inv_fact(i));
        c[static_cast<size_t>(i)] = (i % 2 == 0) ? v : -v;
      }
      return c;
    };
    TruncatedSeries zero(reg, policy);
    RingMatrix<TruncatedSeries> M(static_cast<size_t>(k), static_cast<size_t>(k), zero);
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= k; ++b) {
        std::vector<std::vector<ExactScalar>> acc(
            static_cast<size_t>(h1) + 1,
            std::vector<ExactScalar>(static_cast<size_t>(h1) + 1, ExactScalar(0)));
        for (long l = std::max(a, b) - 1; l < N + k; ++l) {
          ExactScalar pref = chi.pow(l - a + 1) * chib.pow(l - b + 1);
          auto lx = lag_coeffs(l - a + 1, a - 1, minus_inv_chi, h1);
          auto ly = lag_coeffs(l - b + 1, b - 1, minus_inv_chib, h1);
          for (int i = 0; i <= h1; ++i)
            for (int ip = 0; ip <= h1; ++ip)
              acc[static_cast<size_t>(i)][static_cast<size_t>(ip)] +=
                  pref * lx[static_cast<size_t>(i)] * ly[static_cast<size_t>(ip)];
        }
        TruncatedSeries e(reg, policy);
        for (int i = 0; i <= h1; ++i)
          for (int ip = 0; ip <= h1; ++ip)
            e.add_term({i, ip}, acc[static_cast<size_t>(i)][static_cast<size_t>(ip)]);
        M.at(static_cast<size_t>(a - 1), static_cast<size_t>(b - 1)) = e;
      }
    TruncatedSeries detM = ring_det(M);
    DiffOperator op = DiffOperator::monomial(2, {h1, h1});
    return apply_operator_at_zero(op, detM);
  }
  // Second-derivative route: four auxiliary variables (u1, u2) x (v1, v2),
  // coefficient-law entries of the doubly second-order Borel transform, then
  // the operator [d_u1 d_v1]^{h1} [(d_u1^2 + d_u2)(d_v1^2 + d_v2)]^{h2}.
  int cap = h1 + 2 * h2;
  KernelJet jet = cue_jet(N + k, chi, cap + k - 1, cap + k - 1);
  RegistryPtr reg = VarRegistry::make({"u1", "u2", "v1", "v2"});
  auto pol = std::make_shared<TruncPolicy>();
  pol->weight = {1, 2, 1, 2};
  pol->group = {0, 0, 1, 1};
  pol->cap = {cap, cap};
  PolicyPtr policy(pol);
  TruncatedSeries zero(reg, policy);
  RingMatrix<TruncatedSeries> M(static_cast<size_t>(k), static_cast<size_t>(k), zero);
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      TruncatedSeries e(reg, policy);
      for (int m = 0; m <= cap; ++m)
        for (int p = 0; m + 2 * p <= cap; ++p)
          for (int n = 0; n <= cap; ++n)
            for (int q = 0; n + 2 * q <= cap; ++q) {
              int s = m + a - 1 + 2 * p;
              int t = n + b - 1 + 2 * q;
              Rational f = inv_fact(s) * inv_fact(t) * inv_fact(m) * inv_fact(p) *
                           inv_fact(n) * inv_fact(q);
              f.canonicalize();
              e.add_term({m, p, n, q}, jet.deriv(s, t) * ExactScalar(f));
            }
      M.at(static_cast<size_t>(a - 1), static_cast<size_t>(b - 1)) = e;
    }
  TruncatedSeries detM = ring_det(M);
  DiffOperator side_x = (build_D(1, 2).pow(h1) * build_D(2, 2).pow(h2)).lift(4, 0);
  DiffOperator side_y = (build_D(1, 2).pow(h1) * build_D(2, 2).pow(h2)).lift(4, 2);
  return apply_operator_at_zero(side_x * side_y, detM);
}

ExactScalar cue_finite_moment_d1_borel(long N, int k, int h1, const ExactScalar& chi) {
  cue_check_args(N, k, h1, 0);
  KernelJet jet = cue_jet(N + k, chi, h1 + k - 1, h1 + k - 1);
  RegistryPtr reg = VarRegistry::make({"u", "v"});
  auto pol = std::make_shared<TruncPolicy>();
  pol->weight = {1, 1};
  pol->group = {0, 1};
  pol->cap = {h1, h1};
  PolicyPtr policy(pol);
  TruncatedSeries zero(reg, policy);
  RingMatrix<TruncatedSeries> M(static_cast<size_t>(k), static_cast<size_t>(k), zero);
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      TruncatedSeries e(reg, policy);
      for (int i = 0; i <= h1; ++i)
        for (int ip = 0; ip <= h1; ++ip) {
          Rational f = inv_fact(i + a - 1) * inv_fact(ip + b - 1) * inv_fact(i) * inv_fact(ip);
          f.canonicalize();
          e.add_term({i, ip}, jet.deriv(i + a - 1, ip + b - 1) * ExactScalar(f));
        }
      M.at(static_cast<size_t>(a - 1), static_cast<size_t>(b - 1)) = e;
    }
  TruncatedSeries detM = ring_det(M);
  return apply_operator_at_zero(DiffOperator::monomial(2, {h1, h1}), detM);
}

Rational cue_disc_limit(int k, int h1, const Rational& t) {
  if (k < 1 || h1 < 0 || h1 > k)
    throw std::invalid_argument("cue_disc_limit: need 0 <= h1 <= k");
  Rational num = Rational(factorial(h1)) *
                 laguerre(h1, 0, Rational(-static_cast<long>(k) * k) * t);
  Rational den = rational_pow(Rational(1) - t, static_cast<long>(k) * k + 2 * h1);
  Rational r = num / den;
  r.canonicalize();
  return r;
}

Rational cue_circle_limit_d1_exact(int k, int h1, const Rational& c) {
  if (k < 1 || h1 < 0 || h1 > k)
    throw std::invalid_argument("cue_circle_limit_d1: need 0 <= h1 <= k");
  // Entries g_ab(u) = sum_p u^p / (p! (k + a - b + p)!) kept to degree 2 h1;
  // the operator removes at most two degrees per application, so the constant
  // term at the end is exact.
  int cap = 2 * h1;
  RegistryPtr reg = VarRegistry::make({"u"});
  MultiPoly zero(reg);
  RingMatrix<MultiPoly> M(static_cast<size_t>(k), static_cast<size_t>(k), zero);
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      MultiPoly e(reg);
      for (int p = 0; p <= cap; ++p) {
        Rational f = inv_fact(p) * inv_fact(k + a - b + p);
        f.canonicalize();
        e.add_term({p}, ExactScalar(f));
      }
      M.at(static_cast<size_t>(a - 1), static_cast<size_t>(b - 1)) = e;
    }
  MultiPoly det = ring_det(M);
  ExactScalar cc = ExactScalar(c) * ExactScalar(c + Rational(1));
  for (int step = 0; step < h1; ++step)
    det = det * cc + det.derivative(0, 1) - det.derivative(0, 2);
  ExactScalar value = det.coeff({0});
  return value.re();
}

double cue_circle_limit_d1(int k, int h1, const Rational& c) {
  return cue_circle_limit_d1_exact(k, h1, c).get_d();
}

}  // namespace charderiv
