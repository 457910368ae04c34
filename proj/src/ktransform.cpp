#include "charderiv/ktransform.hpp"

#include <stdexcept>

namespace charderiv {

int TransformSide::total_mult() const {
  int p = 0;
  for (int m : mult) p += m;
  return p;
}

TransformSpace make_transform_space(const std::vector<SideInput>& sides) {
  std::vector<std::string> names;
  auto policy = std::make_shared<TruncPolicy>();
  TransformSpace space;
  for (const auto& in : sides) {
    if (in.chi.size() != in.mult.size() || in.chi.size() != in.cap.size())
      throw std::invalid_argument("make_transform_space: side arity mismatch");
    if (in.d < 1) throw std::invalid_argument("make_transform_space: d must be >= 1");
    for (size_t a = 0; a < in.chi.size(); ++a) {
      if (in.mult[a] < 1) throw std::invalid_argument("make_transform_space: P_l must be >= 1");
      if (in.cap[a] < 0) throw std::invalid_argument("make_transform_space: negative cap");
      for (size_t b = a + 1; b < in.chi.size(); ++b)
        if (in.chi[a] == in.chi[b])
          throw std::invalid_argument("make_transform_space: points must be distinct");
    }
    TransformSide side;
    side.chi = in.chi;
    side.mult = in.mult;
    side.cap = in.cap;
    side.d = in.d;
    side.var_base = names.size();
    side.group_base = policy->cap.size();
    for (size_t l = 0; l < in.chi.size(); ++l) {
      policy->cap.push_back(in.cap[l]);
      for (int j = 1; j <= in.d; ++j) {
        names.push_back(in.prefix + std::to_string(l + 1) + "_" + std::to_string(j));
        policy->weight.push_back(j);
        policy->group.push_back(static_cast<int>(side.group_base + l));
      }
    }
    space.sides.push_back(std::move(side));
  }
  space.reg = VarRegistry::make(std::move(names));
  PolicyPtr pol(policy);
  space.policy = pol;
  return space;
}

namespace {

// Laurent series in the local variable t = zeta - chi_l with TruncatedSeries
// coefficients.  Exponents are clamped to [min_e, max_e]; dropping terms is
// safe because every subsequently multiplied factor has non-negative minimal
// exponent (below min_e can never climb back) and we only ever read exponents
// <= max_e at the end.
using Laurent = std::map<int, TruncatedSeries>;

void ladd(Laurent& acc, int e, const TruncatedSeries& s, int min_e, int max_e) {
  if (e < min_e || e > max_e || s.is_zero()) return;
  auto it = acc.find(e);
  if (it == acc.end()) {
    acc.emplace(e, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Laurent lmul(const Laurent& a, const Laurent& b, int min_e, int max_e) {
  Laurent out;
  for (const auto& [ea, sa] : a)
    for (const auto& [eb, sb] : b) {
      int e = ea + eb;
      if (e < min_e || e > max_e) continue;
      ladd(out, e, sa * sb, min_e, max_e);
    }
  return out;
}

// exp of a Laurent series all of whose coefficients carry at least one
// auxiliary variable: powers eventually leave the truncation window.
Laurent lexp(const Laurent& x, const TruncatedSeries& one, int min_e, int max_e) {
  Laurent acc;
  ladd(acc, 0, one, min_e, max_e);
  Laurent power = acc;
  Rational inv_fact(1);
  for (long n = 1;; ++n) {
    power = lmul(power, x, min_e, max_e);
    if (power.empty()) break;
    inv_fact /= n;
    ExactScalar f{inv_fact};
    for (const auto& [e, s] : power) ladd(acc, e, s * f, min_e, max_e);
  }
  return acc;
}

}  // namespace

std::vector<std::vector<TruncatedSeries>> ktransform_parts(const TransformSpace& space,
                                                           size_t side_idx, int alpha) {
  const TransformSide& side = space.sides.at(side_idx);
  int P = side.total_mult();
  if (alpha < 1 || alpha > P)
    throw std::invalid_argument("ktransform_parts: alpha out of range 1..P");
  TruncatedSeries one = TruncatedSeries::constant(space.reg, space.policy, ExactScalar(1));
  std::vector<std::vector<TruncatedSeries>> g;
  for (size_t l = 0; l < side.chi.size(); ++l) {
    int window = side.mult[l] + side.cap[l];  // pole order P_l plus budget T_l
    int min_e = -window, max_e = 0;
    // Local exponential factor exp[sum_j (j-1)! u_{l,j} t^{-j}].
    Laurent x_local;
    for (int j = 1; j <= side.d; ++j) {
      TruncatedSeries uv = TruncatedSeries::variable(space.reg, space.policy, side.var(l, j));
      ladd(x_local, -j, uv * ExactScalar(factorial(j - 1)), min_e, max_e);
    }
    Laurent G = lexp(x_local, one, min_e, max_e);
    // Fold in the pole t^{-P_l} now: every factor multiplied from here on has
    // non-negative minimal exponent, so clamping intermediates at max_e = 0
    // can no longer discard terms that would later shift down into range.
    {
      Laurent shifted;
      for (const auto& [e, s] : G) ladd(shifted, e - side.mult[l], s, min_e, max_e);
      G = shifted;
    }
    // The remaining factors carry only non-negative powers of t.  A factor
    // term t^p matters whenever it can land a pole term (exponent >= min_e)
    // at or below t^{-1}, so factors live on [0, window - 1]; the products
    // stay clamped to [min_e, 0].
    int up_max = window - 1;
    // Exponential factors of the other points, expanded around t = 0:
    // (t + delta)^{-j} = sum_p (-1)^p C(j+p-1,p) delta^{-j-p} t^p.
    for (size_t m = 0; m < side.chi.size(); ++m) {
      if (m == l) continue;
      ExactScalar delta = side.chi[l] - side.chi[m];
      Laurent x_other;
      for (int j = 1; j <= side.d; ++j) {
        TruncatedSeries uv = TruncatedSeries::variable(space.reg, space.policy, side.var(m, j));
        uv *= ExactScalar(factorial(j - 1));
        for (int p = 0; p <= up_max; ++p) {
          ExactScalar coeff = ExactScalar(binomial(j + p - 1, p)) * delta.pow(-(j + p));
          if (p % 2 == 1) coeff = -coeff;
          ladd(x_other, p, uv * coeff, 0, up_max);
        }
      }
      G = lmul(G, lexp(x_other, one, 0, up_max), min_e, max_e);
    }
    // zeta^{P-alpha} = (chi_l + t)^{P-alpha}.
    Laurent zpow;
    for (int p = 0; p <= P - alpha; ++p)
      ladd(zpow, p, one * (ExactScalar(binomial(P - alpha, p)) * side.chi[l].pow(P - alpha - p)),
           0, up_max);
    G = lmul(G, zpow, min_e, max_e);
    // Remaining pole factors (t + chi_l - chi_m)^{-P_m} for m != l.
    for (size_t m = 0; m < side.chi.size(); ++m) {
      if (m == l) continue;
      ExactScalar delta = side.chi[l] - side.chi[m];
      Laurent pole;
      for (int p = 0; p <= up_max; ++p) {
        ExactScalar coeff =
            ExactScalar(binomial(side.mult[m] + p - 1, p)) * delta.pow(-(side.mult[m] + p));
        if (p % 2 == 1) coeff = -coeff;
        ladd(pole, p, one * coeff, 0, up_max);
      }
      G = lmul(G, pole, min_e, max_e);
    }
    // g[l][s] is the residue weight of the local Taylor coefficient a_s:
    // the t^{-1-s} coefficient of G.
    std::vector<TruncatedSeries> gl;
    for (int s = 0; s <= side.jet_order(l); ++s) {
      auto it = G.find(-1 - s);
      gl.push_back(it == G.end() ? TruncatedSeries(space.reg, space.policy) : it->second);
    }
    g.push_back(std::move(gl));
  }
  return g;
}

TruncatedSeries ktransform_function(const TransformSpace& space, size_t side_idx, int alpha,
                                    const std::vector<std::vector<TruncatedSeries>>& parts,
                                    const std::vector<FunctionJet>& jets) {
  const TransformSide& side = space.sides.at(side_idx);
  (void)alpha;
  if (jets.size() != side.chi.size())
    throw std::invalid_argument("ktransform_function: one jet per merging point required");
  TruncatedSeries acc(space.reg, space.policy);
  for (size_t l = 0; l < side.chi.size(); ++l) {
    if (!(jets[l].point == side.chi[l]))
      throw std::invalid_argument("ktransform_function: jet point mismatch");
    if (jets[l].order() < side.jet_order(l))
      throw std::invalid_argument("ktransform_function: insufficient jet order");
    for (int s = 0; s <= side.jet_order(l); ++s) {
      const ExactScalar& a = jets[l].c[static_cast<size_t>(s)];
      if (!a.is_zero()) acc += parts[l][static_cast<size_t>(s)] * a;
    }
  }
  return acc;
}

TruncatedSeries ktransform_function(const TransformSpace& space, size_t side_idx, int alpha,
                                    const std::vector<FunctionJet>& jets) {
  return ktransform_function(space, side_idx, alpha, ktransform_parts(space, side_idx, alpha),
                             jets);
}

TruncatedSeries ktransform_kernel(const TransformSpace& space, size_t side1,
                                  const std::vector<std::vector<TruncatedSeries>>& parts1,
                                  size_t side2,
                                  const std::vector<std::vector<TruncatedSeries>>& parts2,
                                  const std::function<const KernelJet&(size_t, size_t)>& jets) {
  const TransformSide& s1 = space.sides.at(side1);
  const TransformSide& s2 = space.sides.at(side2);
  TruncatedSeries acc(space.reg, space.policy);
  for (size_t l = 0; l < s1.chi.size(); ++l)
    for (size_t m = 0; m < s2.chi.size(); ++m) {
      const KernelJet& jet = jets(l, m);
      if (!(jet.p1 == s1.chi[l]) || !(jet.p2 == s2.chi[m]))
        throw std::invalid_argument("ktransform_kernel: jet point mismatch");
      if (jet.order1() < s1.jet_order(l) || jet.order2() < s2.jet_order(m))
        throw std::invalid_argument("ktransform_kernel: insufficient jet order");
      for (int s = 0; s <= s1.jet_order(l); ++s) {
        bool row_zero = true;
        for (int t = 0; t <= s2.jet_order(m); ++t)
          if (!jet.c[static_cast<size_t>(s)][static_cast<size_t>(t)].is_zero()) row_zero = false;
        if (row_zero) continue;
        for (int t = 0; t <= s2.jet_order(m); ++t) {
          const ExactScalar& cst = jet.c[static_cast<size_t>(s)][static_cast<size_t>(t)];
          if (cst.is_zero()) continue;
          acc += parts1[l][static_cast<size_t>(s)] * parts2[m][static_cast<size_t>(t)] * cst;
        }
      }
    }
  return acc;
}

TruncatedSeries ktransform_kernel(const TransformSpace& space, size_t side1, int alpha,
                                  size_t side2, int gamma,
                                  const std::function<const KernelJet&(size_t, size_t)>& jets) {
  return ktransform_kernel(space, side1, ktransform_parts(space, side1, alpha), side2,
                           ktransform_parts(space, side2, gamma), jets);
}

TruncatedSeries borel_series(const FunctionJet& f, RegistryPtr reg, PolicyPtr policy,
                             size_t var_base, int d) {
  TruncatedSeries out(reg, policy);
  int group = policy->group.at(var_base);
  int cap = policy->cap.at(static_cast<size_t>(group));
  if (f.order() < cap) throw std::invalid_argument("borel_series: insufficient jet order");
  // Enumerate exponent tuples m with weighted degree sum_j j m_j <= cap.
  Exponents e(reg->size(), 0);
  struct Rec {
    const FunctionJet& f;
    TruncatedSeries& out;
    Exponents& e;
    size_t var_base;
    int d;
    void go(int j, int budget, const Rational& factor, int s) {
      if (j > d) {
        out.add_term(e, f.c[static_cast<size_t>(s)] * ExactScalar(factor));
        return;
      }
      Rational fac = factor;
      Integer wfac = factorial(j - 1);
      for (int m = 0; m * j <= budget; ++m) {
        e[var_base + static_cast<size_t>(j - 1)] = m;
        if (m > 0) fac *= Rational(wfac) / Rational(m);
        go(j + 1, budget - m * j, fac, s + m * j);
      }
      e[var_base + static_cast<size_t>(j - 1)] = 0;
    }
  } rec{f, out, e, var_base, d};
  rec.go(1, cap, Rational(1), 0);
  return out;
}

}  // namespace charderiv
