#include "charderiv/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace charderiv {

std::shared_ptr<const VarRegistry> VarRegistry::make(std::vector<std::string> names) {
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("VarRegistry: duplicate variable name " + names[i]);
  return std::shared_ptr<const VarRegistry>(new VarRegistry(std::move(names)));
}

size_t VarRegistry::index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::out_of_range("VarRegistry: unknown variable " + name);
}

MultiPoly MultiPoly::constant(RegistryPtr reg, const ExactScalar& c) {
  MultiPoly p(std::move(reg));
  if (!c.is_zero()) p.terms_[Exponents(p.reg_->size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(RegistryPtr reg, size_t var, int power) {
  MultiPoly p(std::move(reg));
  if (var >= p.reg_->size()) throw std::out_of_range("MultiPoly::variable: bad index");
  if (power < 0) throw std::invalid_argument("MultiPoly::variable: negative power");
  Exponents e(p.reg_->size(), 0);
  e[var] = power;
  p.terms_[e] = ExactScalar(1);
  return p;
}

MultiPoly MultiPoly::monomial(RegistryPtr reg, Exponents e, const ExactScalar& c) {
  MultiPoly p(std::move(reg));
  if (e.size() != p.reg_->size()) throw std::invalid_argument("MultiPoly::monomial: bad arity");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
  if (!c.is_zero()) p.terms_[std::move(e)] = c;
  return p;
}

ExactScalar MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

int MultiPoly::degree_in(size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MultiPoly::add_term(const Exponents& e, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(reg_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(reg_);
  Exponents e(reg_ ? reg_->size() : 0);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::derivative(size_t var, int n) const {
  if (n < 0) throw std::invalid_argument("MultiPoly::derivative: negative order");
  MultiPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < n) continue;
    // Multiply by e_v (e_v-1) ... (e_v-n+1).
    Integer f = falling_factorial(Integer(e[var]), n);
    Exponents d = e;
    d[var] -= n;
    r.add_term(d, c * ExactScalar(f));
  }
  return r;
}

MultiPoly MultiPoly::substitute(size_t var, const ExactScalar& value) const {
  MultiPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    int p = d[var];
    d[var] = 0;
    r.add_term(d, c * value.pow(p));
  }
  return r;
}

ExactScalar MultiPoly::eval(const std::vector<ExactScalar>& point) const {
  if (reg_ && point.size() != reg_->size())
    throw std::invalid_argument("MultiPoly::eval: wrong point arity");
  ExactScalar acc(0);
  for (const auto& [e, c] : terms_) {
    ExactScalar t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << reg_->name(i);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiPoly divide_by_linear(const MultiPoly& p, size_t var_a, size_t var_b) {
  // Treat p as a polynomial in x_b with MultiPoly coefficients c_d and run
  // synthetic division by (x_b - x_a): the quotient coefficients satisfy
  // q_{D-1} = c_D, q_{d-1} = c_d + x_a * q_d, with remainder c_0 + x_a * q_0.
  const RegistryPtr& reg = p.registry();
  if (p.is_zero()) return MultiPoly(reg);
  int D = p.degree_in(var_b);
  std::vector<MultiPoly> c(static_cast<size_t>(D) + 1, MultiPoly(reg));
  for (const auto& [e, v] : p.terms()) {
    Exponents d = e;
    int pow = d[var_b];
    d[var_b] = 0;
    c[static_cast<size_t>(pow)].add_term(d, v);
  }
  MultiPoly xa = MultiPoly::variable(reg, var_a);
  std::vector<MultiPoly> q(static_cast<size_t>(std::max(D, 1)), MultiPoly(reg));
  MultiPoly carry(reg);  // carry = q_d while computing q_{d-1}
  for (int d = D; d >= 1; --d) {
    MultiPoly qd = c[static_cast<size_t>(d)] + xa * carry;
    q[static_cast<size_t>(d) - 1] = qd;
    carry = std::move(qd);
  }
  MultiPoly rem = c[0] + xa * carry;
  if (!rem.is_zero())
    throw std::runtime_error("divide_by_linear: nonzero remainder (invariant violation)");
  MultiPoly result(reg);
  for (size_t d = 0; d < q.size(); ++d) {
    for (const auto& [e, v] : q[d].terms()) {
      Exponents m = e;
      m[var_b] += static_cast<int>(d);
      result.add_term(m, v);
    }
  }
  return result;
}

}  // namespace charderiv
