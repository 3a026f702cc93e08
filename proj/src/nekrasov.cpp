#include "thooks/nekrasov.hpp"

#include <algorithm>
#include <stdexcept>

#include "thooks/partition.hpp"

namespace thooks {

namespace {

mpq_class rational(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

void check_guard(int m, bool allow_beyond_guard) {
  if (m < 0) throw std::domain_error("q-degree must be non-negative");
  if (m > kNekrasovGuard && !allow_beyond_guard)
    throw GuardExceeded("q-degree " + std::to_string(m) + " exceeds the guard of " +
                        std::to_string(kNekrasovGuard));
}

}  // namespace

ZPolynomial::ZPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

ZPolynomial ZPolynomial::constant(const mpq_class& c) { return ZPolynomial({c}); }

ZPolynomial ZPolynomial::linear(const mpq_class& c0, const mpq_class& c1) { return ZPolynomial({c0, c1}); }

void ZPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class ZPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

mpq_class ZPolynomial::evaluate(const mpq_class& z) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const ZPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const mpq_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string to_string(const ZPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    mpq_class c = p.coefficient(k);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (k == 0 || !unit) out += c.get_str();
    if (k >= 1) {
      if (!unit) out += ' ';
      out += 'z';
      if (k >= 2) out += '^' + std::to_string(k);
    }
  }
  return out;
}

ZPolynomial no_rhs(int m, bool allow_beyond_guard) {
  check_guard(m, allow_beyond_guard);
  ZPolynomial sum;
  for (const auto& lambda : enumerate_partitions(m)) {
    auto term = ZPolynomial::constant(1);
    const auto hooks = hook_multiset(lambda);
    for (int h : hooks.entries())
      term *= ZPolynomial::linear(1, rational(-1, static_cast<long>(h) * h));
    sum += term;
  }
  return sum;
}

ZPolynomial shifted_binomial(int k) {
  if (k < 0) throw std::domain_error("shifted_binomial: k must be non-negative");
  auto out = ZPolynomial::constant(1);
  for (int j = 1; j <= k; ++j) {
    out *= ZPolynomial::linear(-j, 1);
    out *= rational(1, j);
  }
  return out;
}

std::vector<ZPolynomial> no_lhs_series(int m_max, bool allow_beyond_guard) {
  check_guard(m_max, allow_beyond_guard);
  const auto len = static_cast<std::size_t>(m_max) + 1;
  std::vector<ZPolynomial> series(len);
  series[0] = ZPolynomial::constant(1);

  std::vector<ZPolynomial> binomials;
  for (int k = 0; k <= m_max; ++k) {
    auto b = shifted_binomial(k);
    if (k % 2 == 1) b *= mpq_class(-1);
    binomials.push_back(std::move(b));
  }

  for (int n = 1; n <= m_max; ++n) {
    std::vector<ZPolynomial> next(len);
    for (int i = 0; i <= m_max; ++i) {
      if (series[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int k = 0; i + n * k <= m_max; ++k)
        next[static_cast<std::size_t>(i + n * k)] += series[static_cast<std::size_t>(i)] *
                                                      binomials[static_cast<std::size_t>(k)];
    }
    series = std::move(next);
  }
  return series;
}

ZPolynomial no_lhs(int m, bool allow_beyond_guard) {
  return no_lhs_series(m, allow_beyond_guard)[static_cast<std::size_t>(m)];
}

IdentityCheck check_no_identity(int m_max, bool allow_beyond_guard) {
  const auto lhs = no_lhs_series(m_max, allow_beyond_guard);
  std::vector<int> mismatch(static_cast<std::size_t>(m_max) + 1, -1);
#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m <= m_max; ++m) {
    const auto rhs = no_rhs(m, allow_beyond_guard);
    const auto& left = lhs[static_cast<std::size_t>(m)];
    const int top = std::max(left.degree(), rhs.degree());
    for (int k = 0; k <= top; ++k) {
      if (left.coefficient(k) != rhs.coefficient(k)) {
        mismatch[static_cast<std::size_t>(m)] = k;
        break;
      }
    }
  }
  IdentityCheck out;
  out.m_max = m_max;
  for (int m = 0; m <= m_max; ++m) {
    if (mismatch[static_cast<std::size_t>(m)] >= 0) {
      out.verified = false;
      out.mismatch_m = m;
      out.mismatch_degree = mismatch[static_cast<std::size_t>(m)];
      break;
    }
  }
  return out;
}

std::vector<mpq_class> specialize(int m_max, const mpq_class& z, bool allow_beyond_guard) {
  check_guard(m_max, allow_beyond_guard);
  std::vector<mpq_class> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) out.push_back(no_rhs(m, allow_beyond_guard).evaluate(z));
  return out;
}

}  // namespace thooks
