#include "charderiv/evaluators.hpp"

#include <algorithm>
#include <stdexcept>

namespace charderiv {

namespace {

SideInput side_from_pts(const std::vector<PointDerivs>& pts, int d, const std::string& prefix) {
  SideInput in;
  in.d = d;
  in.prefix = prefix;
  for (const auto& pt : pts) {
    in.chi.push_back(pt.chi);
    in.mult.push_back(pt.mult());
    in.cap.push_back(pt.total());
  }
  return in;
}

}  // namespace

DiffOperator side_operator(const TransformSpace& space, size_t side_idx,
                           const std::vector<PointDerivs>& pts) {
  const TransformSide& side = space.sides.at(side_idx);
  int d = side.d;
  auto m = spec_multiplicities(pts, d);
  DiffOperator op = DiffOperator::identity(space.reg->size());
  for (size_t l = 0; l < pts.size(); ++l) {
    DiffOperator point_op = DiffOperator::identity(static_cast<size_t>(d));
    for (int k = 1; k <= d; ++k)
      if (m[l][static_cast<size_t>(k - 1)] > 0)
        point_op = point_op * build_D(k, d).pow(m[l][static_cast<size_t>(k - 1)]);
    op = op * point_op.lift(space.reg->size(), side.var(l, 1));
  }
  return op;
}

ExactScalar eval_det_onesided(const std::vector<PointDerivs>& pts,
                              const std::vector<UniPoly>& B) {
  spec_validate(pts);
  int P = spec_total_vars(pts);
  if (static_cast<int>(B.size()) != P)
    throw std::invalid_argument("eval_det_onesided: need P column functions");
  int d = spec_max_order(pts);
  TransformSpace space = make_transform_space({side_from_pts(pts, d, "u")});
  const TransformSide& side = space.sides[0];

  std::vector<std::vector<FunctionJet>> jets(B.size());
  for (size_t b = 0; b < B.size(); ++b)
    for (size_t l = 0; l < side.chi.size(); ++l)
      jets[b].push_back(B[b].jet(side.chi[l], side.jet_order(l)));

  TruncatedSeries zero(space.reg, space.policy);
  RingMatrix<TruncatedSeries> M(static_cast<size_t>(P), static_cast<size_t>(P), zero);
  for (int alpha = 1; alpha <= P; ++alpha) {
    auto parts = ktransform_parts(space, 0, alpha);
    for (size_t b = 0; b < B.size(); ++b)
      M.at(static_cast<size_t>(alpha - 1), b) =
          ktransform_function(space, 0, alpha, parts, jets[b]);
  }
  TruncatedSeries detM = ring_det(M);
  return apply_operator_at_zero(side_operator(space, 0, pts), detM);
}

ExactScalar eval_det_twosided(const std::vector<PointDerivs>& xpts,
                              const std::vector<PointDerivs>& ypts, const PolyKernel& B) {
  return eval_det_twosided(xpts, ypts,
                           KernelJetFn([&B](const ExactScalar& x, const ExactScalar& y, int o1,
                                            int o2) { return B.jet(x, y, o1, o2); }));
}

ExactScalar eval_det_twosided(const std::vector<PointDerivs>& xpts,
                              const std::vector<PointDerivs>& ypts, const KernelJetFn& jet_of) {
  spec_validate(xpts);
  spec_validate(ypts);
  int P = spec_total_vars(xpts);
  if (spec_total_vars(ypts) != P)
    throw std::invalid_argument("eval_det_twosided: sides must have equal size");
  int dx = spec_max_order(xpts), dy = spec_max_order(ypts);
  TransformSpace space =
      make_transform_space({side_from_pts(xpts, dx, "u"), side_from_pts(ypts, dy, "v")});
  const TransformSide& sx = space.sides[0];
  const TransformSide& sy = space.sides[1];

  std::vector<std::vector<KernelJet>> jets(sx.chi.size(),
                                           std::vector<KernelJet>(sy.chi.size()));
  for (size_t l = 0; l < sx.chi.size(); ++l)
    for (size_t m = 0; m < sy.chi.size(); ++m)
      jets[l][m] = jet_of(sx.chi[l], sy.chi[m], sx.jet_order(l), sy.jet_order(m));
  auto jet_fn = [&](size_t l, size_t m) -> const KernelJet& { return jets[l][m]; };

  std::vector<std::vector<std::vector<TruncatedSeries>>> px, py;
  for (int a = 1; a <= P; ++a) {
    px.push_back(ktransform_parts(space, 0, a));
    py.push_back(ktransform_parts(space, 1, a));
  }
  TruncatedSeries zero(space.reg, space.policy);
  RingMatrix<TruncatedSeries> M(static_cast<size_t>(P), static_cast<size_t>(P), zero);
  for (int alpha = 1; alpha <= P; ++alpha)
    for (int gamma = 1; gamma <= P; ++gamma)
      M.at(static_cast<size_t>(alpha - 1), static_cast<size_t>(gamma - 1)) = ktransform_kernel(
          space, 0, px[static_cast<size_t>(alpha - 1)], 1, py[static_cast<size_t>(gamma - 1)],
          jet_fn);
  TruncatedSeries detM = ring_det(M);
  DiffOperator op = side_operator(space, 0, xpts) * side_operator(space, 1, ypts);
  return apply_operator_at_zero(op, detM);
}

ExactScalar eval_pf_main(const std::vector<PointDerivs>& pts, const PolyKernel& A,
                         const std::vector<UniPoly>& B, const RingMatrix<ExactScalar>& C) {
  spec_validate(pts);
  if (!A.is_skew()) throw std::invalid_argument("eval_pf_main: kernel must be skew-symmetric");
  int P = spec_total_vars(pts);
  int Q = static_cast<int>(B.size());
  if ((P + Q) % 2 != 0 || P + Q == 0)
    throw std::invalid_argument("eval_pf_main: P + Q must be positive and even");
  if (C.rows() != static_cast<size_t>(Q) || C.cols() != static_cast<size_t>(Q) ||
      (Q > 0 && !is_antisymmetric(C)))
    throw std::invalid_argument("eval_pf_main: C must be antisymmetric Q x Q");
  int d = spec_max_order(pts);
  TransformSpace space = make_transform_space({side_from_pts(pts, d, "u")});
  const TransformSide& side = space.sides[0];
  size_t L = side.chi.size();

  std::vector<std::vector<KernelJet>> ajets(L, std::vector<KernelJet>(L));
  for (size_t l = 0; l < L; ++l)
    for (size_t m = 0; m < L; ++m)
      ajets[l][m] = A.jet(side.chi[l], side.chi[m], side.jet_order(l), side.jet_order(m));
  auto ajet_fn = [&](size_t l, size_t m) -> const KernelJet& { return ajets[l][m]; };

  std::vector<std::vector<FunctionJet>> bjets(B.size());
  for (size_t b = 0; b < B.size(); ++b)
    for (size_t l = 0; l < L; ++l) bjets[b].push_back(B[b].jet(side.chi[l], side.jet_order(l)));

  std::vector<std::vector<std::vector<TruncatedSeries>>> parts;
  for (int a = 1; a <= P; ++a) parts.push_back(ktransform_parts(space, 0, a));

  size_t n = static_cast<size_t>(P + Q);
  TruncatedSeries zero(space.reg, space.policy);
  TruncatedSeries one = TruncatedSeries::constant(space.reg, space.policy, ExactScalar(1));
  RingMatrix<TruncatedSeries> M(n, n, zero);
  for (int alpha = 1; alpha <= P; ++alpha)
    for (int gamma = 1; gamma <= P; ++gamma)
      M.at(static_cast<size_t>(alpha - 1), static_cast<size_t>(gamma - 1)) = ktransform_kernel(
          space, 0, parts[static_cast<size_t>(alpha - 1)], 0,
          parts[static_cast<size_t>(gamma - 1)], ajet_fn);
  // Skewness of A must survive the transform exactly, including zeros on the
  // diagonal; anything else signals an internal error.
  for (int alpha = 1; alpha <= P; ++alpha)
    for (int gamma = alpha; gamma <= P; ++gamma)
      if (!(M.at(static_cast<size_t>(alpha - 1), static_cast<size_t>(gamma - 1)) ==
            -M.at(static_cast<size_t>(gamma - 1), static_cast<size_t>(alpha - 1))))
        throw std::runtime_error("eval_pf_main: transformed kernel lost antisymmetry");
  for (int alpha = 1; alpha <= P; ++alpha)
    for (size_t b = 0; b < B.size(); ++b) {
      TruncatedSeries t = ktransform_function(space, 0, alpha,
                                              parts[static_cast<size_t>(alpha - 1)], bjets[b]);
      M.at(static_cast<size_t>(alpha - 1), static_cast<size_t>(P) + b) = t;
      M.at(static_cast<size_t>(P) + b, static_cast<size_t>(alpha - 1)) = -t;
    }
  for (size_t b = 0; b < B.size(); ++b)
    for (size_t dcol = 0; dcol < B.size(); ++dcol)
      M.at(static_cast<size_t>(P) + b, static_cast<size_t>(P) + dcol) =
          one * C.at(b, dcol);
  TruncatedSeries pf = ring_pfaffian(M, one);
  return apply_operator_at_zero(side_operator(space, 0, pts), pf);
}

// ---- Kostka route --------------------------------------------------------

namespace {

long weight_sum(const WeightVector& w) {
  long s = 0;
  for (int v : w) {
    if (v < 0) throw std::invalid_argument("weight vector entries must be >= 0");
    s += v;
  }
  return s;
}

Rational weight_factorial(const WeightVector& w) {
  Rational r(1);
  for (int v : w) r *= Rational(factorial(v));
  return r;
}

}  // namespace

ExactScalar eval_det_kostka(const WeightVector& alpha, const WeightVector& beta,
                            const ExactScalar& chi, const ExactScalar& xi,
                            const PolyKernel& B) {
  int k = static_cast<int>(alpha.size());
  if (static_cast<int>(beta.size()) != k)
    throw std::invalid_argument("eval_det_kostka: alpha and beta must have length k");
  long sa = weight_sum(alpha), sb = weight_sum(beta);
  int o1 = static_cast<int>(sa) + k - 1, o2 = static_cast<int>(sb) + k - 1;
  return eval_det_kostka(alpha, beta, B.jet(chi, xi, o1, o2));
}

ExactScalar eval_det_kostka(const WeightVector& alpha, const WeightVector& beta,
                            const KernelJet& jet) {
  int k = static_cast<int>(alpha.size());
  if (static_cast<int>(beta.size()) != k)
    throw std::invalid_argument("eval_det_kostka: alpha and beta must have length k");
  long sa = weight_sum(alpha), sb = weight_sum(beta);
  if (jet.order1() < static_cast<int>(sa) + k - 1 || jet.order2() < static_cast<int>(sb) + k - 1)
    throw std::invalid_argument("eval_det_kostka: kernel jet order too low");
  ExactScalar acc(0);
  for (const auto& mu : partitions(static_cast<int>(sa), k))
    for (const auto& lambda : partitions(static_cast<int>(sb), k)) {
      Integer km = kostka(mu, alpha);
      if (sgn(km) == 0) continue;
      Integer kl = kostka(lambda, beta);
      if (sgn(kl) == 0) continue;
      auto muhat = shifted_sequence(mu, k);
      auto lhat = shifted_sequence(lambda, k);
      RingMatrix<ExactScalar> D(static_cast<size_t>(k), static_cast<size_t>(k), ExactScalar(0));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          D.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
              jet.deriv(static_cast<int>(muhat[static_cast<size_t>(a)]),
                        static_cast<int>(lhat[static_cast<size_t>(b)]));
      Rational pref = Rational(km * kl) /
                      (sequence_factorial(muhat) * sequence_factorial(lhat));
      pref.canonicalize();
      acc += ExactScalar(pref) * det(D);
    }
  return acc * ExactScalar(weight_factorial(alpha) * weight_factorial(beta));
}

ExactScalar eval_pf_kostka(const WeightVector& alpha, const ExactScalar& chi,
                           const PolyKernel& A) {
  int n = static_cast<int>(alpha.size());
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("eval_pf_kostka: need an even number of variables");
  if (!A.is_skew()) throw std::invalid_argument("eval_pf_kostka: kernel must be skew-symmetric");
  long sa = weight_sum(alpha);
  int o = static_cast<int>(sa) + n - 1;
  KernelJet jet = A.jet(chi, chi, o, o);
  ExactScalar acc(0);
  for (const auto& mu : partitions(static_cast<int>(sa), n)) {
    Integer km = kostka(mu, alpha);
    if (sgn(km) == 0) continue;
    auto muhat = shifted_sequence(mu, n);
    RingMatrix<ExactScalar> M(static_cast<size_t>(n), static_cast<size_t>(n), ExactScalar(0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        M.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
            jet.deriv(static_cast<int>(muhat[static_cast<size_t>(a)]),
                      static_cast<int>(muhat[static_cast<size_t>(b)]));
    Rational pref = Rational(km) / sequence_factorial(muhat);
    pref.canonicalize();
    acc += ExactScalar(pref) * pfaffian(M);
  }
  return acc * ExactScalar(weight_factorial(alpha));
}

Integer a_multisum(const std::vector<long>& x, const std::vector<long>& y) {
  for (long v : x)
    if (v < 0) return Integer(0);
  for (long v : y)
    if (v < 0) return Integer(0);
  size_t m = x.size(), n = y.size();
  if (m == 0 || n == 0) {
    for (long v : x)
      if (v != 0) return Integer(0);
    for (long v : y)
      if (v != 0) return Integer(0);
    return Integer(1);
  }
  // For a fixed choice of the r-compositions the s-sums factorize over j via
  // the Vandermonde convolution:
  //   sum_{s_1+..+s_m = y} prod_l C(r_l + s_l, r_l) = C(y + sum_l r_l + m - 1, y).
  Integer total(0);
  std::vector<long> rho(n, 0);  // rho_j = sum_l r_j^{(l)} so far
  struct Rec {
    const std::vector<long>& x;
    const std::vector<long>& y;
    size_t m, n;
    std::vector<long>& rho;
    Integer& total;
    void choose_row(size_t l, size_t j, long rest) {
      if (j == n - 1) {
        rho[j] += rest;
        next_row(l + 1);
        rho[j] -= rest;
        return;
      }
      for (long v = 0; v <= rest; ++v) {
        rho[j] += v;
        choose_row(l, j + 1, rest - v);
        rho[j] -= v;
      }
    }
    void next_row(size_t l) {
      if (l == m) {
        Integer prod(1);
        for (size_t j = 0; j < n; ++j)
          prod *= binomial(y[j] + rho[j] + static_cast<long>(m) - 1, y[j]);
        total += prod;
        return;
      }
      choose_row(l, 0, x[l]);
    }
  } rec{x, y, m, n, rho, total};
  rec.next_row(0);
  return total;
}

namespace {

int perm_sign(const std::vector<size_t>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

Integer a_tilde(const std::vector<long>& lhat, const std::vector<long>& nhat,
                const std::vector<long>& muhat, const std::vector<long>& etahat) {
  size_t m = lhat.size(), n = muhat.size();
  if (nhat.size() != m || etahat.size() != n)
    throw std::invalid_argument("a_tilde: tuple size mismatch");
  std::vector<size_t> sigma(m), tau(n);
  for (size_t i = 0; i < m; ++i) sigma[i] = i;
  Integer total(0);
  std::vector<long> xs(m), ys(n);
  do {
    int ssign = perm_sign(sigma);
    for (size_t i = 0; i < m; ++i) xs[i] = lhat[i] - nhat[sigma[i]];
    bool xneg = false;
    for (long v : xs)
      if (v < 0) xneg = true;
    if (xneg) continue;
    for (size_t i = 0; i < n; ++i) tau[i] = i;
    do {
      int tsign = perm_sign(tau);
      for (size_t i = 0; i < n; ++i) ys[i] = muhat[i] - etahat[tau[i]];
      Integer a = a_multisum(xs, ys);
      if (sgn(a) == 0) continue;
      if (ssign * tsign > 0)
        total += a;
      else
        total -= a;
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

ExactScalar eval_pf_twopoint_kostka(const WeightVector& alpha, const ExactScalar& chi,
                                    const ExactScalar& xi, const PolyKernel& A) {
  int k = static_cast<int>(alpha.size());
  if (k < 1) throw std::invalid_argument("eval_pf_twopoint_kostka: empty exponent vector");
  if (chi == xi)
    throw std::invalid_argument("eval_pf_twopoint_kostka: the two points must be distinct");
  if (!A.is_skew())
    throw std::invalid_argument("eval_pf_twopoint_kostka: kernel must be skew-symmetric");
  long sa = weight_sum(alpha);
  // The q, q' sums run over 0..|alpha|; we extend the range by two and check
  // that the extra terms vanish, guarding the hard-coded bound.
  long qmax = sa + 2;
  int jet_order = static_cast<int>(qmax) + k - 1;
  KernelJet jcc = A.jet(chi, chi, jet_order, jet_order);
  KernelJet jcx = A.jet(chi, xi, jet_order, jet_order);
  KernelJet jxx = A.jet(xi, xi, jet_order, jet_order);
  ExactScalar dxc = xi - chi;

  // Kostka data for the |alpha| partitions, shared across all (q, q').
  struct KTerm {
    Integer kv;
    std::vector<long> hat;
  };
  std::vector<KTerm> kterms;
  for (const auto& lam : partitions(static_cast<int>(sa), k)) {
    Integer kv = kostka(lam, alpha);
    if (sgn(kv) == 0) continue;
    kterms.push_back({kv, shifted_sequence(lam, k)});
  }

  ExactScalar total(0);
  for (long q = 0; q <= qmax; ++q)
    for (long qp = 0; qp <= qmax; ++qp) {
      ExactScalar qterm(0);
      for (const auto& nu : partitions(static_cast<int>(q), k)) {
        auto nhat = shifted_sequence(nu, k);
        for (const auto& eta : partitions(static_cast<int>(qp), k)) {
          auto ehat = shifted_sequence(eta, k);
          // Pfaffian block over derivatives at the two points.
          size_t nn = static_cast<size_t>(2 * k);
          RingMatrix<ExactScalar> M(nn, nn, ExactScalar(0));
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
              int na = static_cast<int>(nhat[static_cast<size_t>(a)]);
              int nb = static_cast<int>(nhat[static_cast<size_t>(b)]);
              int ea = static_cast<int>(ehat[static_cast<size_t>(a)]);
              int eb = static_cast<int>(ehat[static_cast<size_t>(b)]);
              M.at(static_cast<size_t>(a), static_cast<size_t>(b)) = jcc.deriv(na, nb);
              M.at(static_cast<size_t>(a), static_cast<size_t>(k + b)) = jcx.deriv(na, eb);
              M.at(static_cast<size_t>(k + a), static_cast<size_t>(b)) = -jcx.deriv(nb, ea);
              M.at(static_cast<size_t>(k + a), static_cast<size_t>(k + b)) = jxx.deriv(ea, eb);
            }
          ExactScalar pf = pfaffian(M);
          if (pf.is_zero()) continue;
          Integer ksum(0);
          for (const auto& t1 : kterms)
            for (const auto& t2 : kterms)
              ksum += t1.kv * t2.kv * a_tilde(t1.hat, nhat, t2.hat, ehat);
          if (sgn(ksum) == 0) continue;
          Rational pref = Rational(ksum) / (sequence_factorial(nhat) * sequence_factorial(ehat));
          pref.canonicalize();
          qterm += ExactScalar(pref) * pf;
        }
      }
      if (qterm.is_zero()) continue;
      ExactScalar contrib = qterm * dxc.pow(q + qp);
      if (qp % 2 == 1) contrib = -contrib;
      if (q > sa || qp > sa)
        throw std::runtime_error(
            "eval_pf_twopoint_kostka: term beyond the expected summation bound is nonzero");
      total += contrib;
    }
  Rational af = weight_factorial(alpha);
  ExactScalar pref = ExactScalar(Integer(af * af)) * dxc.pow(-(2 * sa + static_cast<long>(k) * k));
  if (sa % 2 == 1) pref = -pref;
  return pref * total;
}

// ---- first-order route ---------------------------------------------------

ExactScalar eval_det_first_order_onesided(int k, int h, const ExactScalar& chi,
                                          const std::vector<UniPoly>& B) {
  if (k < 1 || h < 0 || h > k)
    throw std::invalid_argument("eval_det_first_order_onesided: need 0 <= h <= k");
  if (static_cast<int>(B.size()) != k)
    throw std::invalid_argument("eval_det_first_order_onesided: need k column functions");
  int dmax = (k - h) + k - 1;
  std::vector<FunctionJet> jets;
  for (const auto& b : B) jets.push_back(b.jet(chi, dmax));
  ExactScalar acc(0);
  for (const auto& r : compositions(k - h, k)) {
    Integer mult = multinomial(k - h, r);
    RingMatrix<ExactScalar> D(static_cast<size_t>(k), static_cast<size_t>(k), ExactScalar(0));
    Rational den(1);
    for (int a = 0; a < k; ++a) {
      int ord = r[static_cast<size_t>(a)] + a;
      den *= Rational(factorial(ord));
      for (int b = 0; b < k; ++b)
        D.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
            jets[static_cast<size_t>(b)].deriv(ord);
    }
    Rational pref = Rational(mult) / den;
    pref.canonicalize();
    acc += ExactScalar(pref) * det(D);
  }
  return acc;
}

ExactScalar eval_det_first_order_twosided(int k, int h, const ExactScalar& chi,
                                          const ExactScalar& xi, const PolyKernel& B) {
  if (k < 1 || h < 0 || h > k)
    throw std::invalid_argument("eval_det_first_order_twosided: need 0 <= h <= k");
  int dmax = (k - h) + k - 1;
  KernelJet jet = B.jet(chi, xi, dmax, dmax);
  ExactScalar acc(0);
  for (const auto& r : compositions(k - h, k))
    for (const auto& s : compositions(k - h, k)) {
      Integer mult = multinomial(k - h, r) * multinomial(k - h, s);
      RingMatrix<ExactScalar> D(static_cast<size_t>(k), static_cast<size_t>(k), ExactScalar(0));
      Rational den(1);
      for (int c = 0; c < k; ++c)
        den *= Rational(factorial(r[static_cast<size_t>(c)] + c) *
                        factorial(s[static_cast<size_t>(c)] + c));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          D.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
              jet.deriv(r[static_cast<size_t>(a)] + a, s[static_cast<size_t>(b)] + b);
      Rational pref = Rational(mult) / den;
      pref.canonicalize();
      acc += ExactScalar(pref) * det(D);
    }
  return acc;
}

ExactScalar eval_det_borel_onesided(int k, int h, const ExactScalar& chi,
                                    const std::vector<UniPoly>& B) {
  if (k < 1 || h < 0 || h > k)
    throw std::invalid_argument("eval_det_borel_onesided: need 0 <= h <= k");
  if (static_cast<int>(B.size()) != k)
    throw std::invalid_argument("eval_det_borel_onesided: need k column functions");
  int cap = k - h;
  RegistryPtr reg = VarRegistry::make({"u"});
  auto pol = std::make_shared<TruncPolicy>();
  pol->weight = {1};
  pol->group = {0};
  pol->cap = {cap};
  PolicyPtr policy(pol);
  TruncatedSeries zero(reg, policy);
  RingMatrix<TruncatedSeries> M(static_cast<size_t>(k), static_cast<size_t>(k), zero);
  for (int b = 0; b < k; ++b) {
    FunctionJet jet = B[static_cast<size_t>(b)].jet(chi, cap + k - 1);
    for (int a = 0; a < k; ++a) {
      // d_u^{a-1} of the Borel series: coeff of u^r is f^{(r+a-1)} /((r+a-1)! r!).
      TruncatedSeries e(reg, policy);
      for (int r = 0; r <= cap; ++r) {
        Rational c = Rational(1, 1) / Rational(factorial(r));
        c.canonicalize();
        e.add_term({r}, jet.deriv(r + a) * ExactScalar(c * inv_factorial_or_zero(r + a)));
      }
      M.at(static_cast<size_t>(a), static_cast<size_t>(b)) = e;
    }
  }
  TruncatedSeries detM = ring_det(M);
  return detM.coeff({cap}) * ExactScalar(factorial(cap));
}

ExactScalar eval_det_borel_twosided(int k, int h, const ExactScalar& chi,
                                    const ExactScalar& xi, const PolyKernel& B) {
  if (k < 1 || h < 0 || h > k)
    throw std::invalid_argument("eval_det_borel_twosided: need 0 <= h <= k");
  int cap = k - h;
  RegistryPtr reg = VarRegistry::make({"u", "v"});
  auto pol = std::make_shared<TruncPolicy>();
  pol->weight = {1, 1};
  pol->group = {0, 1};
  pol->cap = {cap, cap};
  PolicyPtr policy(pol);
  KernelJet jet = B.jet(chi, xi, cap + k - 1, cap + k - 1);
  TruncatedSeries zero(reg, policy);
  RingMatrix<TruncatedSeries> M(static_cast<size_t>(k), static_cast<size_t>(k), zero);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      TruncatedSeries e(reg, policy);
      for (int r = 0; r <= cap; ++r)
        for (int s = 0; s <= cap; ++s) {
          Rational c = inv_factorial_or_zero(r) * inv_factorial_or_zero(s) *
                       inv_factorial_or_zero(r + a) * inv_factorial_or_zero(s + b);
          c.canonicalize();
          e.add_term({r, s}, jet.deriv(r + a, s + b) * ExactScalar(c));
        }
      M.at(static_cast<size_t>(a), static_cast<size_t>(b)) = e;
    }
  TruncatedSeries detM = ring_det(M);
  return detM.coeff({cap, cap}) * ExactScalar(Integer(factorial(cap) * factorial(cap)));
}

}  // namespace charderiv
