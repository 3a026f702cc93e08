#include "thooks/cores.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "thooks/abacus.hpp"

namespace thooks {

namespace {

__extension__ using wide = __int128;

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  wide result = 1;
  wide b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void require_non_negative(std::int64_t n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": n must be non-negative");
}

// (p, exponent) pairs by trial division.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t v) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

// Lower bound on the final core size given a prefix of runner counts.
// `fixed` = sum of t a(a-1)/2 + c a over the chosen runners, `beads` their
// total, `remaining` how many runners (numbered from `next_col`) are left.
long double size_lower_bound(int t, long long fixed, long long beads, int remaining, int next_col) {
  if (remaining == 0) return static_cast<long double>(fixed - beads * (beads - 1) / 2);
  // With r more beads spread over the remaining runners:
  //   size >= fixed + t r^2/(2m) + (next_col - t/2) r - (S + r)(S + r - 1)/2.
  const long double m = remaining;
  const long double S = static_cast<long double>(beads);
  const long double quad = t / (2 * m) - 0.5L;
  const long double lin = next_col - t / 2.0L - S + 0.5L;
  const long double constant = static_cast<long double>(fixed) - S * (S - 1) / 2;
  long double r = quad > 0 ? -lin / (2 * quad) : 0;
  if (r < 0) r = 0;
  return constant + quad * r * r + lin * r;
}

void canonical_rec(int t, int max_size, int col, long long fixed, long long beads, std::vector<int>& counts,
                   const std::function<void(const std::vector<int>&, long long)>& visit) {
  if (col == t) {
    const long long size = fixed - beads * (beads - 1) / 2;
    if (size <= max_size) visit(counts, size);
    return;
  }
  constexpr long double slack = 1e-6L;
  long double previous = 0;
  for (long long a = 0;; ++a) {
    const long long f = t * a * (a - 1) / 2 + static_cast<long long>(col) * a;
    const long double bound = size_lower_bound(t, fixed + f, beads + a, t - col - 1, col + 1);
    // The bound is convex in a: once it is rising and past max_size, stop.
    if (bound > max_size + slack) {
      if (a > 0 && bound > previous) break;
      previous = bound;
      continue;
    }
    previous = bound;
    counts[static_cast<std::size_t>(col)] = static_cast<int>(a);
    canonical_rec(t, max_size, col + 1, fixed + f, beads + a, counts, visit);
    counts[static_cast<std::size_t>(col)] = 0;
  }
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("legendre_symbol: " + std::to_string(p) + " is not an odd prime");
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int padic_valuation(std::int64_t ell, std::int64_t n) {
  if (!is_prime(ell)) throw std::domain_error("padic_valuation: " + std::to_string(ell) + " is not prime");
  if (n == 0) throw std::domain_error("padic_valuation: valuation of 0 is infinite");
  int e = 0;
  while (n % ell == 0) {
    n /= ell;
    ++e;
  }
  return e;
}

int c2(std::int64_t n) {
  require_non_negative(n, "c2");
  const std::int64_t v = 8 * n + 1;
  const std::int64_t r = isqrt(v);
  return r * r == v ? 1 : 0;
}

std::int64_t c3_divisor_sum(std::int64_t n) {
  require_non_negative(n, "c3_divisor_sum");
  const std::int64_t v = 3 * n + 1;
  auto symbol = [](std::int64_t d) -> std::int64_t {
    switch (d % 3) {
      case 1: return 1;
      case 2: return -1;
      default: return 0;
    }
  };
  std::int64_t sum = 0;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    sum += symbol(d);
    if (d != v / d) sum += symbol(v / d);
  }
  return sum;
}

bool c3_nonvanishing(std::int64_t n) {
  require_non_negative(n, "c3_nonvanishing");
  for (auto [p, e] : factorize(3 * n + 1))
    if (p % 3 == 2 && e % 2 != 0) return false;
  return true;
}

std::vector<QFSolution> c3_qf_solutions(std::int64_t n) {
  require_non_negative(n, "c3_qf_solutions");
  auto search = [n](std::int64_t bound) {
    std::vector<QFSolution> found;
    for (std::int64_t a = 0; a <= bound; ++a)
      for (std::int64_t b = 0; b <= bound; ++b)
        if (a * a - a * b + b * b + b == n) found.push_back({a, b});
    return found;
  };
  std::int64_t bound = 1 + static_cast<std::int64_t>(std::ceil(2 * std::sqrt(static_cast<double>(n + 1))));
  auto found = search(bound);
  while (true) {
    auto wider = search(2 * bound);
    if (wider.size() == found.size()) break;
    found = std::move(wider);
    bound *= 2;
  }
  return found;
}

std::int64_t c3_qf_count(std::int64_t n) { return static_cast<std::int64_t>(c3_qf_solutions(n).size()); }

BigSeries ct_count_series(int t, int truncation) {
  if (t < 2) throw std::domain_error("ct_count_series: t must be at least 2");
  auto s = eta_inverse_power_series(1, truncation);
  for (int m = 1; t * m <= truncation; ++m)
    for (int rep = 0; rep < t; ++rep) s.multiply_by_one_minus_q_pow(t * m);
  return s;
}

void for_each_canonical_core(int max_size, int t,
                             const std::function<void(const std::vector<int>&, long long)>& visit) {
  if (t < 2) throw std::domain_error("for_each_canonical_core: t must be at least 2");
  if (max_size < 0) return;
  std::vector<int> counts(static_cast<std::size_t>(t), 0);
  canonical_rec(t, max_size, 1, 0, 0, counts, visit);
}

std::vector<std::int64_t> count_t_cores_by_size(int max_size, int t) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(max_size, -1) + 1), 0);
  for_each_canonical_core(max_size, t, [&](const std::vector<int>&, long long size) {
    ++out[static_cast<std::size_t>(size)];
  });
  return out;
}

std::vector<Partition> enumerate_t_cores(int n, int t, CoreEnumeration mode) {
  if (n < 0) throw std::domain_error("enumerate_t_cores: n must be non-negative");
  if (t < 2) throw std::domain_error("enumerate_t_cores: t must be at least 2");
  std::vector<Partition> out;
  if (mode == CoreEnumeration::oracle) {
    for_each_partition(n, [&](std::span<const int> parts) {
      if (count_t_hooks(parts, t) == 0) out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
  }
  for_each_canonical_core(n, t, [&](const std::vector<int>& counts, long long size) {
    if (size == n) out.push_back(partition_from_canonical(CanonicalCoreAbacus{counts}));
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

CoreCount core_count(int n, int t, bool with_witnesses) {
  CoreCount out{n, t, 0, std::nullopt};
  auto cores = enumerate_t_cores(n, t);
  out.count = static_cast<std::int64_t>(cores.size());
  if (with_witnesses) out.witnesses = std::move(cores);
  return out;
}

}  // namespace thooks
