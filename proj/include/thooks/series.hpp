#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace thooks {

/// Power series in q truncated at q^N, with exact integer coefficients.
class BigSeries {
 public:
  /// The zero series with coefficients 0..truncation.
  explicit BigSeries(int truncation);
  explicit BigSeries(std::vector<mpz_class> coeffs);

  static BigSeries one(int truncation);

  int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^k; zero past the truncation.
  const mpz_class& operator[](int k) const;
  mpz_class& at(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  std::span<const mpz_class> coefficients() const noexcept { return coeffs_; }
  std::span<mpz_class> coefficients() noexcept { return coeffs_; }

  /// Multiplies in place by 1/(1 - q^m), m >= 1.
  BigSeries& divide_by_one_minus_q_pow(int m);
  /// Multiplies in place by (1 - q^m), m >= 1.
  BigSeries& multiply_by_one_minus_q_pow(int m);

  /// Coefficients past the new truncation are dropped.
  BigSeries truncated(int truncation) const;

  friend BigSeries operator+(const BigSeries& a, const BigSeries& b);
  /// Product truncated at min of the two truncations.
  friend BigSeries operator*(const BigSeries& a, const BigSeries& b);
  friend bool operator==(const BigSeries& a, const BigSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

/// Coefficients of prod_{m>=1} (1 - q^m)^{-t} up to q^N. The q^k
/// coefficient counts t-tuples of partitions of total size k; t = 1 gives
/// the partition numbers p(k).
BigSeries eta_inverse_power_series(int t, int truncation);

/// Coefficients of prod_{m>=1} (1 - q^m)^{e} for e >= 0, up to q^N.
BigSeries eta_power_series(int exponent, int truncation);

}  // namespace thooks
