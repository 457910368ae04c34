#include "charderiv/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace charderiv {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

namespace {

void partitions_rec(int m, int max_len, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(m, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(m - p, max_len - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int m, int max_len, int max_part) {
  if (m < 0) return {};
  if (max_part < 0) max_part = m;
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(m, max_len, max_part, cur, out);
  return out;
}

std::vector<WeightVector> compositions(int m, int n) {
  std::vector<WeightVector> out;
  if (m < 0 || n < 0) return out;
  if (n == 0) {
    if (m == 0) out.push_back({});
    return out;
  }
  WeightVector cur(static_cast<size_t>(n), 0);
  // Lexicographic enumeration by recursion on the first slot.
  struct Rec {
    int n;
    std::vector<WeightVector>& out;
    WeightVector& cur;
    void go(int pos, int rest) {
      if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = rest;
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= rest; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        go(pos + 1, rest - v);
      }
    }
  } rec{n, out, cur};
  rec.go(0, m);
  return out;
}

std::vector<long> shifted_sequence(const Partition& lambda, int k) {
  if (static_cast<int>(lambda.size()) > k)
    throw std::invalid_argument("shifted_sequence: partition longer than k");
  std::vector<long> lhat(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    int idx = k - j;  // lambda_{k-j+1}, 0-based, zero-padded
    int part = idx < static_cast<int>(lambda.size()) ? lambda[static_cast<size_t>(idx)] : 0;
    lhat[static_cast<size_t>(j - 1)] = j - 1 + part;
  }
  return lhat;
}

Rational sequence_factorial(const std::vector<long>& seq) {
  Rational r(1);
  for (long v : seq) r *= Rational(factorial(v));
  return r;
}

Rational inv_factorial_or_zero(long n) {
  if (n < 0) return Rational(0);
  Rational r(Integer(1), factorial(n));
  r.canonicalize();
  return r;
}

namespace {

using Key = std::pair<Partition, Partition>;

Integer kostka_rec(const Partition& lambda, const Partition& alpha,
                   std::map<Key, Integer>& memo) {
  if (alpha.empty()) return lambda.empty() ? Integer(1) : Integer(0);
  if (lambda.empty()) return Integer(0);
  Key key(lambda, alpha);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // Strip off a horizontal strip of size alpha.back(): enumerate partitions mu
  // interlacing lambda (lambda_{i+1} <= mu_i <= lambda_i) whose size is
  // |lambda| - alpha.back().
  int strip = alpha.back();
  Partition alpha_rest(alpha.begin(), alpha.end() - 1);
  Integer total(0);
  size_t rows = lambda.size();
  Partition mu(rows);
  // Depth-first over rows with a running deficit budget.
  struct Rec {
    const Partition& lambda;
    const Partition& alpha_rest;
    Partition& mu;
    std::map<Key, Integer>& memo;
    Integer& total;
    void go(size_t i, int remaining_strip) {
      if (i == lambda.size()) {
        if (remaining_strip != 0) return;
        Partition trimmed;
        for (int p : mu)
          if (p > 0) trimmed.push_back(p);
        total += kostka_rec(trimmed, alpha_rest, memo);
        return;
      }
      int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
      for (int v = lo; v <= lambda[i]; ++v) {
        int removed = lambda[i] - v;
        if (removed > remaining_strip) continue;
        mu[i] = v;
        go(i + 1, remaining_strip - removed);
      }
    }
  } rec{lambda, alpha_rest, mu, memo, total};
  rec.go(0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer kostka(const Partition& lambda, const WeightVector& alpha) {
  if (!is_partition(lambda)) throw std::invalid_argument("kostka: shape is not a partition");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("kostka: negative content entry");
  long sl = 0, sa = 0;
  for (int p : lambda) sl += p;
  for (int a : alpha) sa += a;
  if (sl != sa) return Integer(0);
  // Kostka numbers are symmetric in the content; canonicalize to a partition
  // so the memo table is shared across permutations of alpha.
  Partition content;
  for (int a : alpha)
    if (a > 0) content.push_back(a);
  std::sort(content.begin(), content.end(), std::greater<int>());
  thread_local std::map<Key, Integer> memo;
  return kostka_rec(lambda, content, memo);
}

Integer kostka_bruteforce(const Partition& lambda, const WeightVector& alpha) {
  long sl = 0, sa = 0;
  for (int p : lambda) sl += p;
  for (int a : alpha) sa += a;
  if (sl != sa) return Integer(0);
  if (lambda.empty()) return Integer(1);
  size_t rows = lambda.size();
  std::vector<std::vector<int>> tab(rows);
  for (size_t i = 0; i < rows; ++i) tab[i].assign(static_cast<size_t>(lambda[i]), 0);
  std::vector<int> remaining(alpha.begin(), alpha.end());
  long count = 0;
  // Fill row-major; entries weakly increase left-to-right and strictly
  // increase top-to-bottom, values are 1..len(alpha).
  struct Rec {
    std::vector<std::vector<int>>& tab;
    std::vector<int>& remaining;
    const Partition& lambda;
    long& count;
    void go(size_t i, size_t j) {
      if (i == tab.size()) {
        ++count;
        return;
      }
      size_t ni = i, nj = j + 1;
      if (nj == tab[i].size()) {
        ni = i + 1;
        nj = 0;
      }
      int lo = 1;
      if (j > 0) lo = std::max(lo, tab[i][j - 1]);
      if (i > 0 && j < tab[i - 1].size()) lo = std::max(lo, tab[i - 1][j] + 1);
      for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
        --remaining[static_cast<size_t>(v - 1)];
        tab[i][j] = v;
        go(ni, nj);
        ++remaining[static_cast<size_t>(v - 1)];
      }
    }
  } rec{tab, remaining, lambda, count};
  rec.go(0, 0);
  return Integer(count);
}

Integer kostka_ones_hooks(const Partition& lambda) {
  long m = 0;
  for (int p : lambda) m += p;
  if (m == 0) return Integer(1);
  // Conjugate partition for the arm+leg hook length.
  std::vector<int> conj(static_cast<size_t>(lambda[0]), 0);
  for (int p : lambda)
    for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
  Integer hooks(1);
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) {
      long h = lambda[i] - j + conj[static_cast<size_t>(j - 1)] - static_cast<long>(i + 1) + 1;
      hooks *= h;
    }
  return factorial(m) / hooks;
}

Integer kostka_ones_shifted(const Partition& lambda) {
  long m = 0;
  for (int p : lambda) m += p;
  int k = static_cast<int>(lambda.size());
  if (k == 0) return Integer(1);
  auto lhat = shifted_sequence(lambda, k);
  Integer vdm(1);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) vdm *= Integer(lhat[static_cast<size_t>(b)] - lhat[static_cast<size_t>(a)]);
  Integer denom(1);
  for (long v : lhat) denom *= factorial(v);
  Integer num = factorial(m) * vdm;
  // Exact by construction; divexact would abort on a bug, which is what we want.
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
  return q;
}

namespace {

// Small exact determinant by fraction-free elimination on scalars.
ExactScalar det_scalar(std::vector<std::vector<ExactScalar>> m) {
  size_t n = m.size();
  ExactScalar det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return ExactScalar(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    ExactScalar inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      ExactScalar f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

ExactScalar schur_eval_bialternant(const Partition& lambda,
                                   const std::vector<ExactScalar>& u) {
  int k = static_cast<int>(u.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (u[static_cast<size_t>(a)] == u[static_cast<size_t>(b)])
        throw std::invalid_argument("schur_eval_bialternant: points must be distinct");
  auto lhat = shifted_sequence(lambda, k);
  std::vector<std::vector<ExactScalar>> m(static_cast<size_t>(k),
                                          std::vector<ExactScalar>(static_cast<size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          u[static_cast<size_t>(a)].pow(lhat[static_cast<size_t>(b)]);
  ExactScalar num = det_scalar(std::move(m));
  ExactScalar den(1);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      den *= u[static_cast<size_t>(b)] - u[static_cast<size_t>(a)];
  return num / den;
}

ExactScalar schur_eval_kostka(const Partition& lambda, const std::vector<ExactScalar>& u) {
  long m = 0;
  for (int p : lambda) m += p;
  ExactScalar acc(0);
  for (const auto& alpha : compositions(static_cast<int>(m), static_cast<int>(u.size()))) {
    Integer kn = kostka(lambda, alpha);
    if (sgn(kn) == 0) continue;
    ExactScalar term{kn};
    for (size_t j = 0; j < u.size(); ++j) term *= u[j].pow(alpha[j]);
    acc += term;
  }
  return acc;
}

Rational factorial_schur(const Partition& nu, const Partition& lambda, int k) {
  auto nhat = shifted_sequence(nu, k);
  auto lhat = shifted_sequence(lambda, k);
  std::vector<std::vector<ExactScalar>> m(static_cast<size_t>(k),
                                          std::vector<ExactScalar>(static_cast<size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] = ExactScalar(
          falling_factorial(Integer(lhat[static_cast<size_t>(a)]), nhat[static_cast<size_t>(b)]));
  ExactScalar num = det_scalar(std::move(m));
  Rational den(1);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      den *= Rational(lhat[static_cast<size_t>(b)] - lhat[static_cast<size_t>(a)]);
  Rational r = num.re() / den;
  r.canonicalize();
  return r;
}

Integer multinomial(int m, const WeightVector& r) {
  long s = 0;
  for (int v : r) {
    if (v < 0) return Integer(0);
    s += v;
  }
  if (s != m) throw std::invalid_argument("multinomial: parts do not sum to m");
  Integer num = factorial(m);
  for (int v : r) num /= factorial(v);
  return num;
}

}  // namespace charderiv
