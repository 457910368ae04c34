// Residue transform turning jets of analytic functions into truncated series
// in auxiliary variables.
//
// For a side with merging points chi_1..chi_L (multiplicities P_l, derivative
// budgets T_l) the transform with index alpha maps a function f to
//   sum_l Res_{zeta=chi_l} f(zeta)
//       exp[ sum_{l'} sum_j (j-1)! u_{l',j} (zeta-chi_{l'})^{-j} ]
//       zeta^{P-alpha} / prod_m (zeta-chi_m)^{P_m},
// a truncated series in the u variables.  The residue is linear in the local
// jet of f, so we precompute "parts": g[l][s] is the series multiplying the
// local Taylor coefficient f^(s)(chi_l)/s!.  Kernel (two-argument) transforms
// are then bilinear sums over the same parts, one factor per slot.
//
// Two sides (e.g. a row family and a column family) can share one registry;
// each side owns a contiguous block of variables and truncation groups.

#pragma once

#include <functional>
#include <string>

#include "charderiv/jets.hpp"
#include "charderiv/series.hpp"

namespace charderiv {

struct SideInput {
  std::vector<ExactScalar> chi;  // distinct merging points
  std::vector<int> mult;         // P_l >= 1
  std::vector<int> cap;          // T_l >= 0 (weighted-degree budget at point l)
  int d = 1;                     // auxiliary variables per point
  std::string prefix = "u";      // variable names prefix_{l}_{j}
};

struct TransformSide {
  std::vector<ExactScalar> chi;
  std::vector<int> mult;
  std::vector<int> cap;
  int d = 1;
  size_t var_base = 0;    // registry index of u_{1,1}
  size_t group_base = 0;  // truncation group of point 1

  int total_mult() const;
  size_t var(size_t l, int j) const {  // j = 1..d
    return var_base + l * static_cast<size_t>(d) + static_cast<size_t>(j - 1);
  }
  // Jet order needed from f at chi_l: P_l - 1 + T_l.
  int jet_order(size_t l) const { return mult[l] - 1 + cap[l]; }
};

struct TransformSpace {
  RegistryPtr reg;
  PolicyPtr policy;
  std::vector<TransformSide> sides;
};

TransformSpace make_transform_space(const std::vector<SideInput>& sides);

// g[l][s], l over poles of the side, s = 0..P_l-1+T_l.
std::vector<std::vector<TruncatedSeries>> ktransform_parts(const TransformSpace& space,
                                                           size_t side, int alpha);

// Transform of a single function given its jets at the side's points
// (jets[l] at chi_l with order >= P_l-1+T_l).
TruncatedSeries ktransform_function(const TransformSpace& space, size_t side, int alpha,
                                    const std::vector<FunctionJet>& jets);
TruncatedSeries ktransform_function(const TransformSpace& space, size_t side, int alpha,
                                    const std::vector<std::vector<TruncatedSeries>>& parts,
                                    const std::vector<FunctionJet>& jets);

// Transform of a two-argument kernel, slot 1 over side1 with index alpha and
// slot 2 over side2 with index gamma.  jets(l,m) must return the kernel jet
// at (chi^{side1}_l, chi^{side2}_m) with slot orders as above.
TruncatedSeries ktransform_kernel(const TransformSpace& space, size_t side1, int alpha,
                                  size_t side2, int gamma,
                                  const std::function<const KernelJet&(size_t, size_t)>& jets);
TruncatedSeries ktransform_kernel(const TransformSpace& space, size_t side1,
                                  const std::vector<std::vector<TruncatedSeries>>& parts1,
                                  size_t side2,
                                  const std::vector<std::vector<TruncatedSeries>>& parts2,
                                  const std::function<const KernelJet&(size_t, size_t)>& jets);

// Coefficient-law Borel series of a jet: the coefficient of
// prod_j u_{j}^{m_j} (variables var_base..var_base+d-1, weights 1..d) is
// f^(s)(chi)/s! * prod_j (j-1)!^{m_j} / m_j!  with  s = sum_j j m_j.
TruncatedSeries borel_series(const FunctionJet& f, RegistryPtr reg, PolicyPtr policy,
                             size_t var_base, int d);

}  // namespace charderiv
