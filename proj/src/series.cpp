#include "charderiv/series.hpp"

#include <sstream>
#include <stdexcept>

namespace charderiv {

bool TruncPolicy::admits(const Exponents& e) const {
  std::vector<long> load(cap.size(), 0);
  for (size_t v = 0; v < e.size(); ++v)
    if (e[v] != 0) load[static_cast<size_t>(group[v])] += static_cast<long>(weight[v]) * e[v];
  for (size_t g = 0; g < cap.size(); ++g)
    if (load[g] > cap[g]) return false;
  return true;
}

TruncatedSeries::TruncatedSeries(RegistryPtr reg, PolicyPtr policy)
    : reg_(std::move(reg)), policy_(std::move(policy)) {
  if (policy_->weight.size() != reg_->size() || policy_->group.size() != reg_->size())
    throw std::invalid_argument("TruncatedSeries: policy arity mismatch");
  for (int w : policy_->weight)
    if (w < 1) throw std::invalid_argument("TruncatedSeries: weights must be >= 1");
}

TruncatedSeries TruncatedSeries::constant(RegistryPtr reg, PolicyPtr policy,
                                          const ExactScalar& c) {
  TruncatedSeries s(std::move(reg), std::move(policy));
  if (!c.is_zero()) s.terms_[Exponents(s.reg_->size(), 0)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(RegistryPtr reg, PolicyPtr policy, size_t var) {
  TruncatedSeries s(std::move(reg), std::move(policy));
  Exponents e(s.reg_->size(), 0);
  e[var] = 1;
  if (s.policy_->admits(e)) s.terms_[e] = ExactScalar(1);
  return s;
}

ExactScalar TruncatedSeries::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

ExactScalar TruncatedSeries::constant_term() const {
  return coeff(Exponents(reg_ ? reg_->size() : 0, 0));
}

void TruncatedSeries::add_term(const Exponents& e, const ExactScalar& c) {
  if (c.is_zero() || !policy_->admits(e)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(reg_, policy_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(reg_, policy_);
  Exponents e(reg_ ? reg_->size() : 0);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!constant_term().is_zero())
    throw std::domain_error("TruncatedSeries::exp: nonzero constant term");
  TruncatedSeries acc = TruncatedSeries::constant(reg_, policy_, ExactScalar(1));
  TruncatedSeries power = acc;
  Rational inv_fact(1);
  for (long n = 1;; ++n) {
    power = power * *this;
    if (power.is_zero()) break;
    inv_fact /= n;
    acc += power * ExactScalar(inv_fact);
  }
  return acc;
}

std::string TruncatedSeries::str() const {
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

}  // namespace charderiv
