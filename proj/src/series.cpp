#include "thooks/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "thooks/kernels.hpp"

namespace thooks {

BigSeries::BigSeries(int truncation) {
  if (truncation < 0) throw std::domain_error("BigSeries: truncation must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, 0);
}

BigSeries::BigSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::domain_error("BigSeries: need at least the constant term");
}

BigSeries BigSeries::one(int truncation) {
  BigSeries s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

const mpz_class& BigSeries::operator[](int k) const {
  static const mpz_class zero = 0;
  if (k < 0 || k > truncation()) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigSeries& BigSeries::divide_by_one_minus_q_pow(int m) {
  kernels::parallel::divide_by_one_minus_qm(coeffs_, m);
  return *this;
}

BigSeries& BigSeries::multiply_by_one_minus_q_pow(int m) {
  kernels::parallel::multiply_by_one_minus_qm(coeffs_, m);
  return *this;
}

BigSeries BigSeries::truncated(int truncation) const {
  if (truncation < 0) throw std::domain_error("BigSeries: truncation must be non-negative");
  BigSeries out(truncation);
  for (int k = 0; k <= std::min(truncation, this->truncation()); ++k)
    out.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
  return out;
}

BigSeries operator+(const BigSeries& a, const BigSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  BigSeries out(n);
  for (int k = 0; k <= n; ++k) out.at(k) = a[k] + b[k];
  return out;
}

BigSeries operator*(const BigSeries& a, const BigSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  BigSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) out.at(i + j) += a[i] * b[j];
  }
  return out;
}

BigSeries eta_inverse_power_series(int t, int truncation) {
  if (t < 1) throw std::domain_error("eta_inverse_power_series: t must be at least 1");
  if (truncation < 0) throw std::domain_error("eta_inverse_power_series: truncation must be non-negative");
  return BigSeries(kernels::parallel::eta_inverse_power(t, truncation));
}

BigSeries eta_power_series(int exponent, int truncation) {
  if (exponent < 0) throw std::domain_error("eta_power_series: exponent must be non-negative");
  auto s = BigSeries::one(truncation);
  for (int m = 1; m <= truncation; ++m)
    for (int rep = 0; rep < exponent; ++rep) s.multiply_by_one_minus_q_pow(m);
  return s;
}

}  // namespace thooks
