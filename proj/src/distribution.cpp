#include "thooks/distribution.hpp"

#include <stdexcept>

#include "thooks/cores.hpp"
#include "thooks/kernels.hpp"

namespace thooks {

namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

void check_residue(int a, int b) {
  if (b < 1) throw std::domain_error("modulus b must be at least 1");
  if (a < 0 || a >= b) throw std::domain_error("residue a must satisfy 0 <= a < b");
}

void check_stats(const HookStatistics& stats, int t, int n_max) {
  if (stats.t() != t) throw std::invalid_argument("HookStatistics built for the wrong t");
  if (stats.max_n() < n_max) throw std::invalid_argument("HookStatistics does not cover n_max");
}

Verdict run_vanishing_check(Verdict verdict, const HookStatistics& stats, int a1, int modulus) {
  verdict.kind = VerdictKind::verified;
  for (std::int64_t n = floor_mod(verdict.a2, modulus); n <= verdict.n_max; n += modulus) {
    ++verdict.checked;
    auto count = stats.count(a1, modulus, static_cast<int>(n));
    if (sgn(count) != 0) {
      verdict.kind = VerdictKind::counterexample;
      verdict.counterexample = static_cast<int>(n);
      verdict.counterexample_count = std::move(count);
      break;
    }
  }
  return verdict;
}

}  // namespace

std::string format_ratio(const mpz_class& num, const mpz_class& den, int places) {
  if (sgn(den) <= 0) throw std::domain_error("format_ratio: denominator must be positive");
  if (sgn(num) < 0) throw std::domain_error("format_ratio: numerator must be non-negative");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class scaled = num * scale;
  mpz_class quotient;
  mpz_class remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(2 * remainder, den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;

  mpz_class whole;
  mpz_class frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), quotient.get_mpz_t(), scale.get_mpz_t());
  std::string out = whole.get_str();
  if (places > 0) {
    std::string digits = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string ResidueProfile::proportion(int a, int places) const {
  return format_ratio(counts.at(static_cast<std::size_t>(a)), total, places);
}

HookStatistics::HookStatistics(int t, int max_n)
    : t_(t),
      max_n_(max_n),
      quotients_(0),
      partitions_(0) {
  if (t < 2) throw std::domain_error("HookStatistics: t must be at least 2");
  if (max_n < 0) throw std::domain_error("HookStatistics: max_n must be non-negative");
  cores_.reserve(static_cast<std::size_t>(max_n) + 1);
  if (t == 2) {
    for (int n = 0; n <= max_n; ++n) cores_.emplace_back(c2(n));
  } else if (t == 3) {
    for (int n = 0; n <= max_n; ++n) cores_.emplace_back(static_cast<long>(c3_divisor_sum(n)));
  } else {
    const auto series = ct_count_series(t, max_n);
    cores_.assign(series.coefficients().begin(), series.coefficients().end());
  }
  quotients_ = eta_inverse_power_series(t, max_n / t);
  partitions_ = eta_inverse_power_series(1, max_n);
}

void HookStatistics::check_n(int n) const {
  if (n < 0 || n > max_n_)
    throw std::out_of_range("HookStatistics: n = " + std::to_string(n) + " outside [0, " +
                            std::to_string(max_n_) + "]");
}

const mpz_class& HookStatistics::core_count(int n) const {
  check_n(n);
  return cores_[static_cast<std::size_t>(n)];
}

const mpz_class& HookStatistics::quotient_count(int k) const {
  check_n(t_ * k);
  return quotients_[k];
}

const mpz_class& HookStatistics::partition_count(int n) const {
  check_n(n);
  return partitions_[n];
}

mpz_class HookStatistics::count(int a, int b, int n) const {
  check_residue(a, b);
  check_n(n);
  mpz_class total = 0;
  for (int k = a; t_ * k <= n; k += b) {
    const auto& cores = cores_[static_cast<std::size_t>(n - t_ * k)];
    if (sgn(cores) == 0) continue;
    total += cores * quotients_[k];
  }
  return total;
}

ResidueProfile HookStatistics::profile(int b, int n) const {
  check_residue(0, b);
  ResidueProfile out{t_, b, n, {}, partition_count(n)};
  out.counts.reserve(static_cast<std::size_t>(b));
  for (int a = 0; a < b; ++a) out.counts.push_back(count(a, b, n));
  return out;
}

mpz_class pt_count(int t, int a, int b, int n) {
  check_residue(a, b);
  return HookStatistics(t, n).count(a, b, n);
}

ResidueProfile residue_profile(int t, int b, int n) { return HookStatistics(t, n).profile(b, n); }

ResidueProfile brute_force_profile(int t, int b, int n, bool allow_large) {
  check_residue(0, b);
  if (n < 0) throw std::domain_error("brute_force_profile: n must be non-negative");
  if (n > kBruteForceGuard && !allow_large)
    throw GuardExceeded("brute_force_profile: n = " + std::to_string(n) + " exceeds the enumeration guard of " +
                        std::to_string(kBruteForceGuard));
  const auto hist = kernels::parallel::hook_residue_histogram(n, t, b);
  ResidueProfile out{t, b, n, {}, 0};
  for (auto c : hist) {
    out.counts.emplace_back(static_cast<unsigned long>(c));
    out.total += static_cast<unsigned long>(c);
  }
  return out;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::hypothesis_not_met: return "hypothesis-not-met";
    case VerdictKind::verified: return "verified";
    case VerdictKind::counterexample: return "counterexample";
  }
  return "unknown";
}

Verdict verify_theorem_part1(std::int64_t ell, std::int64_t a1, std::int64_t a2, int n_max,
                             const HookStatistics* stats) {
  if (ell < 3 || !is_prime(ell)) throw std::domain_error("part 1 needs an odd prime ell");
  if (n_max < 0) throw std::domain_error("n_max must be non-negative");
  Verdict verdict{VerdictKind::hypothesis_not_met, ell, a1, a2, n_max, 0, std::nullopt, std::nullopt};
  if (legendre_symbol(-16 * a1 + 8 * a2 + 1, ell) != -1) return verdict;

  std::optional<HookStatistics> own;
  if (stats == nullptr) stats = &own.emplace(2, n_max);
  check_stats(*stats, 2, n_max);
  return run_vanishing_check(verdict, *stats, static_cast<int>(floor_mod(a1, ell)), static_cast<int>(ell));
}

Verdict verify_theorem_part2(std::int64_t ell, std::int64_t a1, std::int64_t a2, int n_max,
                             const HookStatistics* stats) {
  if (!is_prime(ell) || ell % 3 != 2) throw std::domain_error("part 2 needs a prime ell = 2 mod 3");
  if (n_max < 0) throw std::domain_error("n_max must be non-negative");
  Verdict verdict{VerdictKind::hypothesis_not_met, ell, a1, a2, n_max, 0, std::nullopt, std::nullopt};
  const std::int64_t form = -9 * a1 + 3 * a2 + 1;
  if (form == 0 || padic_valuation(ell, form) != 1) return verdict;

  std::optional<HookStatistics> own;
  if (stats == nullptr) stats = &own.emplace(3, n_max);
  check_stats(*stats, 3, n_max);
  const std::int64_t modulus = ell * ell;
  return run_vanishing_check(verdict, *stats, static_cast<int>(floor_mod(a1, modulus)),
                             static_cast<int>(modulus));
}

namespace {

template <typename Verify>
std::vector<Verdict> sweep(std::int64_t range, Verify verify) {
  const std::int64_t cells = range * range;
  std::vector<Verdict> out(static_cast<std::size_t>(cells));
  // Verdicts land in their own slots, so the order never depends on
  // scheduling. Exceptions must not escape the parallel region.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t cell = 0; cell < cells; ++cell) {
    try {
      out[static_cast<std::size_t>(cell)] = verify(cell / range, cell % range);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::vector<Verdict> sweep_theorem_part1(std::int64_t ell, int n_max, const HookStatistics& stats) {
  check_stats(stats, 2, n_max);
  return sweep(ell, [&](std::int64_t a1, std::int64_t a2) {
    return verify_theorem_part1(ell, a1, a2, n_max, &stats);
  });
}

std::vector<Verdict> sweep_theorem_part2(std::int64_t ell, int n_max, const HookStatistics& stats) {
  check_stats(stats, 3, n_max);
  return sweep(ell * ell, [&](std::int64_t a1, std::int64_t a2) {
    return verify_theorem_part2(ell, a1, a2, n_max, &stats);
  });
}

std::vector<int> default_table_rows() { return {300, 600, 900, 4500, 4800, 5100}; }

}  // namespace thooks
