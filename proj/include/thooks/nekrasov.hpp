#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thooks/errors.hpp"

namespace thooks {

/// Polynomial in z with exact rational coefficients; index k holds the
/// coefficient of z^k. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class ZPolynomial {
 public:
  ZPolynomial() = default;
  explicit ZPolynomial(std::vector<mpq_class> coeffs);
  /// The constant polynomial c.
  static ZPolynomial constant(const mpq_class& c);
  /// c0 + c1 z.
  static ZPolynomial linear(const mpq_class& c0, const mpq_class& c1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^k, zero past the degree.
  mpq_class coefficient(int k) const;
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  mpq_class evaluate(const mpq_class& z) const;

  ZPolynomial& operator+=(const ZPolynomial& other);
  ZPolynomial& operator*=(const ZPolynomial& other);
  ZPolynomial& operator*=(const mpq_class& scalar);
  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator*(ZPolynomial a, const ZPolynomial& b) { return a *= b; }
  friend ZPolynomial operator*(ZPolynomial a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// "1 - 5/4 z + 1/4 z^2"; the zero polynomial prints as "0".
std::string to_string(const ZPolynomial& p);

/// Default ceiling on m for the identity checks.
inline constexpr int kNekrasovGuard = 12;

/// sum over lambda |- m of prod over hooks h of (1 - z/h^2).
ZPolynomial no_rhs(int m, bool allow_beyond_guard = false);

/// q^m coefficient of prod_{n=1}^{m} (1 - q^n)^{z-1}, each factor
/// expanded as sum_k (-1)^k C(z-1, k) q^{nk}.
ZPolynomial no_lhs(int m, bool allow_beyond_guard = false);

/// q^0..q^{m_max} coefficients of the product side, computed together.
std::vector<ZPolynomial> no_lhs_series(int m_max, bool allow_beyond_guard = false);

/// C(z-1, k) = (z-1)(z-2)...(z-k)/k! as a polynomial in z.
ZPolynomial shifted_binomial(int k);

struct IdentityCheck {
  bool verified = true;
  int m_max = 0;
  std::optional<int> mismatch_m;       // first q-degree where the sides differ
  std::optional<int> mismatch_degree;  // lowest z-degree that differs there
};

/// Compares both sides coefficient by coefficient for every m <= m_max.
/// The per-m comparisons run in parallel.
IdentityCheck check_no_identity(int m_max, bool allow_beyond_guard = false);

/// no_rhs(m) evaluated at z for m = 0..m_max.
std::vector<mpq_class> specialize(int m_max, const mpq_class& z, bool allow_beyond_guard = false);

}  // namespace thooks
