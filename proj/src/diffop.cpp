#include "charderiv/diffop.hpp"

#include <sstream>
#include <stdexcept>

#include "charderiv/combinatorics.hpp"

namespace charderiv {

DiffOperator DiffOperator::identity(size_t nvars) {
  DiffOperator op;
  op.nvars = nvars;
  op.terms[Exponents(nvars, 0)] = Integer(1);
  return op;
}

DiffOperator DiffOperator::monomial(size_t nvars, Exponents e, Integer c) {
  DiffOperator op;
  op.nvars = nvars;
  if (e.size() != nvars) throw std::invalid_argument("DiffOperator::monomial: bad arity");
  if (sgn(c) != 0) op.terms[std::move(e)] = std::move(c);
  return op;
}

DiffOperator DiffOperator::lift(size_t nvars_global, size_t offset) const {
  if (offset + nvars > nvars_global) throw std::invalid_argument("DiffOperator::lift: overflow");
  DiffOperator op;
  op.nvars = nvars_global;
  for (const auto& [e, c] : terms) {
    Exponents g(nvars_global, 0);
    for (size_t i = 0; i < nvars; ++i) g[offset + i] = e[i];
    op.terms[std::move(g)] = c;
  }
  return op;
}

DiffOperator DiffOperator::operator*(const DiffOperator& o) const {
  if (nvars != o.nvars) throw std::invalid_argument("DiffOperator: arity mismatch");
  DiffOperator r;
  r.nvars = nvars;
  Exponents e(nvars);
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      for (size_t i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      Integer& slot = r.terms[e];
      slot += ca * cb;
      if (sgn(slot) == 0) r.terms.erase(e);
    }
  return r;
}

DiffOperator DiffOperator::pow(int m) const {
  if (m < 0) throw std::invalid_argument("DiffOperator::pow: negative power");
  DiffOperator acc = identity(nvars);
  for (int i = 0; i < m; ++i) acc = acc * *this;
  return acc;
}

bool DiffOperator::homogeneous_weighted(long k) const {
  for (const auto& [e, c] : terms) {
    long w = 0;
    for (size_t j = 0; j < e.size(); ++j) w += static_cast<long>(j + 1) * e[j];
    if (w != k) return false;
  }
  return true;
}

std::string DiffOperator::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    bool any = false;
    if (c != 1) {
      os << c.get_str();
      any = true;
    }
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (any) os << " ";
      os << "d" << (j + 1);
      if (e[j] > 1) os << "^" << e[j];
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

namespace {

// Plain integer polynomial in the auxiliary variables, used only while
// extracting the pure-derivative part of the recurrence.
using IPoly = std::map<Exponents, Integer>;

void ipoly_add(IPoly& p, const Exponents& e, const Integer& c) {
  if (sgn(c) == 0) return;
  Integer& slot = p[e];
  slot += c;
  if (sgn(slot) == 0) p.erase(e);
}

// Apply R = d_1 + sum_{l=1}^{k-1} u_l d_{l+1} to an integer polynomial.
IPoly apply_R(const IPoly& p, int k) {
  IPoly out;
  for (const auto& [e, c] : p) {
    if (e[0] >= 1) {
      Exponents d = e;
      d[0] -= 1;
      ipoly_add(out, d, c * (e[0]));
    }
    for (int l = 1; l <= k - 1; ++l) {
      size_t lo = static_cast<size_t>(l - 1), hi = static_cast<size_t>(l);
      if (e[hi] >= 1) {
        Exponents d = e;
        d[hi] -= 1;
        d[lo] += 1;
        ipoly_add(out, d, c * (e[hi]));
      }
    }
  }
  return out;
}

// Apply a pure-derivative operator to an integer polynomial and evaluate at
// zero: only exactly-matching monomials survive, each weighted by e!.
Integer apply_op_at_zero(const DiffOperator& op, const IPoly& p) {
  Integer acc(0);
  for (const auto& [e, c] : op.terms) {
    auto it = p.find(e);
    if (it == p.end()) continue;
    Integer f(1);
    for (int x : e) f *= factorial(x);
    acc += c * it->second * f;
  }
  return acc;
}

}  // namespace

DiffOperator build_D(int k, int d) {
  if (k < 1 || d < k) throw std::invalid_argument("build_D: need 1 <= k <= d");
  size_t n = static_cast<size_t>(k);
  // D_1 = d_1, then extract D_k from lim D_{k-1} R by acting on candidate
  // monomials u^e with weighted degree k (one per partition of k).
  Exponents e1(n, 0);
  e1[0] = 1;
  DiffOperator D = DiffOperator::monomial(std::max<size_t>(n, 1), e1);
  if (k == 1) return D.lift(static_cast<size_t>(d), 0);
  for (int kk = 2; kk <= k; ++kk) {
    DiffOperator next;
    next.nvars = n;
    for (const auto& part : partitions(kk, kk, kk)) {
      Exponents e(n, 0);
      for (int p : part) ++e[static_cast<size_t>(p - 1)];
      // Candidate monomial u^e; coefficient is (D_{k-1} R u^e)(0) / e!.
      IPoly mono;
      mono[e] = Integer(1);
      IPoly after = apply_R(mono, kk);
      Integer val = apply_op_at_zero(D, after);
      if (sgn(val) == 0) continue;
      Integer f(1);
      for (int x : e) f *= factorial(x);
      Integer coeff;
      mpz_divexact(coeff.get_mpz_t(), val.get_mpz_t(), f.get_mpz_t());
      next.terms[e] = coeff;
    }
    D = next;
  }
  return D.lift(static_cast<size_t>(d), 0);
}

ExactScalar apply_operator_at_zero(const DiffOperator& op, const TruncatedSeries& s) {
  if (op.nvars != s.registry()->size())
    throw std::invalid_argument("apply_operator_at_zero: arity mismatch");
  ExactScalar acc(0);
  for (const auto& [e, c] : op.terms) {
    if (!s.policy()->admits(e))
      throw std::runtime_error(
          "apply_operator_at_zero: insufficient truncation for requested derivative");
    ExactScalar coeff = s.coeff(e);
    if (coeff.is_zero()) continue;
    Integer f(1);
    for (int x : e) f *= factorial(x);
    acc += ExactScalar(Integer(c * f)) * coeff;
  }
  return acc;
}

}  // namespace charderiv
