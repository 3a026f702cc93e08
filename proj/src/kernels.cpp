#include "thooks/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "thooks/partition.hpp"

namespace thooks::kernels {

namespace {

// Below this stride the per-class chains are too short to split.
constexpr int kMinParallelStride = 64;

void check_histogram_args(int n, int t, int b) {
  if (n < 0) throw std::domain_error("hook_residue_histogram: n must be non-negative");
  if (t < 2) throw std::domain_error("hook_residue_histogram: t must be at least 2");
  if (b < 1) throw std::domain_error("hook_residue_histogram: modulus b must be positive");
}

template <typename Visit>
void visit_partitions(int remaining, int max_part, std::vector<int>& prefix, Visit& visit) {
  if (remaining == 0) {
    visit(std::span<const int>(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    visit_partitions(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

namespace serial {

void divide_by_one_minus_qm(std::span<mpz_class> coeffs, int m) {
  if (m < 1) throw std::domain_error("divide_by_one_minus_qm: m must be positive");
  const auto size = coeffs.size();
  for (std::size_t k = static_cast<std::size_t>(m); k < size; ++k) coeffs[k] += coeffs[k - static_cast<std::size_t>(m)];
}

void multiply_by_one_minus_qm(std::span<mpz_class> coeffs, int m) {
  if (m < 1) throw std::domain_error("multiply_by_one_minus_qm: m must be positive");
  const auto stride = static_cast<std::size_t>(m);
  for (std::size_t k = coeffs.size(); k-- > stride;) coeffs[k] -= coeffs[k - stride];
}

std::vector<mpz_class> eta_inverse_power(int t, int truncation) {
  if (t < 0 || truncation < 0) throw std::domain_error("eta_inverse_power: negative argument");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(truncation) + 1, 0);
  coeffs[0] = 1;
  for (int m = 1; m <= truncation; ++m)
    for (int rep = 0; rep < t; ++rep) divide_by_one_minus_qm(coeffs, m);
  return coeffs;
}

ResidueHistogram hook_residue_histogram(int n, int t, int b) {
  check_histogram_args(n, t, b);
  ResidueHistogram hist(static_cast<std::size_t>(b), 0);
  for_each_partition(n, [&](std::span<const int> parts) {
    ++hist[static_cast<std::size_t>(count_t_hooks(parts, t) % b)];
  });
  return hist;
}

}  // namespace serial

namespace parallel {

void divide_by_one_minus_qm(std::span<mpz_class> coeffs, int m) {
  if (m < 1) throw std::domain_error("divide_by_one_minus_qm: m must be positive");
  const long size = static_cast<long>(coeffs.size());
  if (m < kMinParallelStride || omp_get_max_threads() == 1) {
    serial::divide_by_one_minus_qm(coeffs, m);
    return;
  }
#pragma omp parallel for schedule(static)
  for (int r = 0; r < m; ++r) {
    for (long k = r + m; k < size; k += m) coeffs[static_cast<std::size_t>(k)] += coeffs[static_cast<std::size_t>(k - m)];
  }
}

void multiply_by_one_minus_qm(std::span<mpz_class> coeffs, int m) {
  if (m < 1) throw std::domain_error("multiply_by_one_minus_qm: m must be positive");
  const long size = static_cast<long>(coeffs.size());
  if (m < kMinParallelStride || omp_get_max_threads() == 1) {
    serial::multiply_by_one_minus_qm(coeffs, m);
    return;
  }
#pragma omp parallel for schedule(static)
  for (int r = 0; r < m; ++r) {
    long top = r + (size - 1 - r) / m * m;
    for (long k = top; k >= r + m; k -= m) coeffs[static_cast<std::size_t>(k)] -= coeffs[static_cast<std::size_t>(k - m)];
  }
}

std::vector<mpz_class> eta_inverse_power(int t, int truncation) {
  if (t < 0 || truncation < 0) throw std::domain_error("eta_inverse_power: negative argument");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(truncation) + 1, 0);
  coeffs[0] = 1;
  for (int m = 1; m <= truncation; ++m)
    for (int rep = 0; rep < t; ++rep) divide_by_one_minus_qm(coeffs, m);
  return coeffs;
}

ResidueHistogram hook_residue_histogram(int n, int t, int b) {
  check_histogram_args(n, t, b);
  const auto buckets = static_cast<std::size_t>(b);
  ResidueHistogram hist(buckets, 0);
  if (n == 0) {
    hist[0] = 1;
    return hist;
  }
#pragma omp parallel
  {
    ResidueHistogram local(buckets, 0);
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    auto visit = [&](std::span<const int> parts) {
      ++local[static_cast<std::size_t>(count_t_hooks(parts, t) % b)];
    };
#pragma omp for schedule(dynamic)
    for (int first = n; first >= 1; --first) {
      prefix.assign(1, first);
      visit_partitions(n - first, first, prefix, visit);
    }
#pragma omp critical
    for (std::size_t a = 0; a < buckets; ++a) hist[a] += local[a];
  }
  return hist;
}

}  // namespace parallel

int max_threads() { return omp_get_max_threads(); }

void set_threads(int k) {
  if (k > 0) omp_set_num_threads(k);
}

}  // namespace thooks::kernels
