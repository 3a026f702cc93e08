#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: hooks are counted cell by cell, partition numbers come
// from a coin-change table, series products are plain integer convolutions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "thooks/partition.hpp"

namespace thooks::oracle {

/// |{(a,b) in diagram : (a = i and b >= j) or (a >= i and b = j)}|.
inline int hook_set_size(const Partition& p, int i, int j) {
  int count = 0;
  for (int a = 1; a <= p.length(); ++a)
    for (int b = 1; b <= p.part(a); ++b)
      if ((a == i && b >= j) || (a >= i && b == j)) ++count;
  return count;
}

inline std::vector<int> hooks_by_cells(const Partition& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) out.push_back(hook_set_size(p, i, j));
  return out;
}

/// p(0..n) by the coin-change recurrence over largest part.
inline std::vector<std::int64_t> partition_numbers(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
  return p;
}

/// Truncated product of two integer series.
inline std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Number of t-tuples of partitions with total size 0..n, by repeated
/// convolution of the partition numbers.
inline std::vector<std::int64_t> tuple_counts(int t, int n) {
  const auto p = partition_numbers(n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  for (int i = 0; i < t; ++i) out = convolve(out, p);
  return out;
}

/// prod_{m=1}^{n} (1 - q^m)^e expanded directly, truncated at q^n.
inline std::vector<std::int64_t> euler_product_power(int e, int n) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int rep = 0; rep < e; ++rep) {
      std::vector<std::int64_t> factor(static_cast<std::size_t>(n) + 1, 0);
      factor[0] = 1;
      factor[static_cast<std::size_t>(m)] = -1;
      out = convolve(out, factor);
    }
  }
  return out;
}

/// n! as an exact integer.
inline mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Uniform-ish random partition of n: random composition, then sorted.
inline Partition random_partition(std::mt19937& rng, int n) {
  std::vector<int> parts;
  int remaining = n;
  while (remaining > 0) {
    std::uniform_int_distribution<int> pick(1, remaining);
    const int part = pick(rng);
    parts.push_back(part);
    remaining -= part;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace thooks::oracle
