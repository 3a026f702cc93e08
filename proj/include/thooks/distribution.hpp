#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thooks/errors.hpp"
#include "thooks/series.hpp"

namespace thooks {

/// Counts p_t(a, b; n) for every residue a mod b, plus p(n).
struct ResidueProfile {
  int t = 2;
  int b = 1;
  int n = 0;
  std::vector<mpz_class> counts;  // counts[a] = p_t(a, b; n)
  mpz_class total;                // p(n)

  /// counts[a] / total rounded half-even to `places` decimals, e.g. "0.7347".
  std::string proportion(int a, int places = 4) const;

  friend bool operator==(const ResidueProfile&, const ResidueProfile&) = default;
};

/// num/den rounded half-even to `places` decimals; den > 0, num >= 0.
std::string format_ratio(const mpz_class& num, const mpz_class& den, int places = 4);

/// Precomputed series for one t up to a maximum n. Since
/// |lambda| = |core| + t h_t(lambda) and the quotient ranges over all
/// t-tuples of partitions,
///   p_t(a, b; n) = sum_{k = a mod b, tk <= n} c_t(n - tk) Q_t(k)
/// with Q_t(k) the q^k coefficient of prod (1 - q^m)^{-t}.
///
/// Read-only after construction, so one instance can be shared across
/// threads.
class HookStatistics {
 public:
  HookStatistics(int t, int max_n);

  int t() const noexcept { return t_; }
  int max_n() const noexcept { return max_n_; }

  /// c_t(n): closed forms for t = 2, 3; the core series otherwise.
  const mpz_class& core_count(int n) const;
  /// Q_t(k): t-tuples of partitions of total size k.
  const mpz_class& quotient_count(int k) const;
  const mpz_class& partition_count(int n) const;

  /// p_t(a, b; n). Requires b >= 1, 0 <= a < b, 0 <= n <= max_n.
  mpz_class count(int a, int b, int n) const;
  ResidueProfile profile(int b, int n) const;

 private:
  void check_n(int n) const;

  int t_;
  int max_n_;
  std::vector<mpz_class> cores_;
  BigSeries quotients_;
  BigSeries partitions_;
};

mpz_class pt_count(int t, int a, int b, int n);
ResidueProfile residue_profile(int t, int b, int n);

/// Largest n brute_force_profile accepts without the override.
inline constexpr int kBruteForceGuard = 40;

/// Same contract as residue_profile, by enumerating every partition of n.
/// Throws GuardExceeded for n > kBruteForceGuard unless allow_large.
ResidueProfile brute_force_profile(int t, int b, int n, bool allow_large = false);

enum class VerdictKind { hypothesis_not_met, verified, counterexample };

struct Verdict {
  VerdictKind kind = VerdictKind::hypothesis_not_met;
  std::int64_t ell = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  int n_max = 0;
  int checked = 0;                          // values of n examined
  std::optional<int> counterexample;        // first n with a nonzero count
  std::optional<mpz_class> counterexample_count;
};

std::string to_string(VerdictKind kind);

/// If (-16 a1 + 8 a2 + 1 / ell) = -1, checks p_2(a1, ell; n) = 0 for
/// every 0 <= n <= n_max with n = a2 mod ell. `stats` must be for t = 2
/// and cover n_max; when null a private one is built.
Verdict verify_theorem_part1(std::int64_t ell, std::int64_t a1, std::int64_t a2, int n_max,
                             const HookStatistics* stats = nullptr);

/// If ord_ell(-9 a1 + 3 a2 + 1) = 1, checks p_3(a1, ell^2; n) = 0 for
/// every 0 <= n <= n_max with n = a2 mod ell^2. `stats` must be for t = 3.
Verdict verify_theorem_part2(std::int64_t ell, std::int64_t a1, std::int64_t a2, int n_max,
                             const HookStatistics* stats = nullptr);

/// Every (a1, a2) in [0, ell)^2 for part 1, or [0, ell^2)^2 for part 2.
/// Cells are evaluated in parallel; the result is in (a1, a2) order
/// regardless of thread count.
std::vector<Verdict> sweep_theorem_part1(std::int64_t ell, int n_max, const HookStatistics& stats);
std::vector<Verdict> sweep_theorem_part2(std::int64_t ell, int n_max, const HookStatistics& stats);

/// The n values mirrored from the published 2-hooks mod 3 table.
std::vector<int> default_table_rows();

}  // namespace thooks
