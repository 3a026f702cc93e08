#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "thooks/partition.hpp"
#include "thooks/series.hpp"

namespace thooks {

bool is_prime(std::int64_t n);

/// (a/p) for an odd prime p, via Euler's criterion. Throws
/// std::domain_error if p is not an odd prime.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// Exponent of the prime ell in n. Throws std::domain_error for n = 0 or
/// a non-prime ell.
int padic_valuation(std::int64_t ell, std::int64_t n);

/// Number of 2-cores of n: 1 when 8n+1 is a square (n triangular), else 0.
int c2(std::int64_t n);

/// Number of 3-cores of n as sum_{d | 3n+1} (d/3), with (d/3) = +1 for
/// d = 1 mod 3 and -1 for d = 2 mod 3.
std::int64_t c3_divisor_sum(std::int64_t n);

/// True iff every prime p = 2 mod 3 divides 3n+1 to an even power.
bool c3_nonvanishing(std::int64_t n);

/// Non-negative (a, b) with a^2 - ab + b^2 + b = n; the canonical 3-core
/// abacus (0, a, b) has size n.
struct QFSolution {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t x() const noexcept { return -a + 2 * b + 1; }
  std::int64_t y() const noexcept { return a + b + 1; }
  friend bool operator==(const QFSolution&, const QFSolution&) = default;
};

/// All solutions, ordered by (a, b). The search box is grown until it
/// stops producing new solutions.
std::vector<QFSolution> c3_qf_solutions(std::int64_t n);
std::int64_t c3_qf_count(std::int64_t n);

/// c_t(0..N) from prod_{m>=1} (1 - q^{tm})^t / (1 - q^m).
BigSeries ct_count_series(int t, int truncation);

enum class CoreEnumeration {
  abacus,  // canonical abaci (0, a_1, ..., a_{t-1}) of the right size
  oracle,  // filter every partition of n by count_t_hooks == 0
};

/// All t-cores of n, sorted in reverse-lexicographic order.
std::vector<Partition> enumerate_t_cores(int n, int t, CoreEnumeration mode = CoreEnumeration::abacus);

/// Visits every canonical t-core abacus whose core has size <= max_size,
/// passing the runner counts (a_0 = 0) and the core size.
void for_each_canonical_core(int max_size, int t,
                             const std::function<void(const std::vector<int>&, long long)>& visit);

/// Entry n is the number of canonical t-core abaci of size n, n <= max_size.
std::vector<std::int64_t> count_t_cores_by_size(int max_size, int t);

struct CoreCount {
  int n = 0;
  int t = 2;
  std::int64_t count = 0;
  std::optional<std::vector<Partition>> witnesses;
};

CoreCount core_count(int n, int t, bool with_witnesses = false);

}  // namespace thooks
