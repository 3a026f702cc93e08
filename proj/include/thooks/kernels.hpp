#pragma once

// Inner loops shared by the series and brute-force code paths. Each kernel
// has a serial reference and an OpenMP version with the same contract; the
// library calls the parallel ones and the tests hold them to the serial
// results.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace thooks::kernels {

/// Histogram of hook counts mod b: entry a is #{lambda |- n : h_t(lambda) = a mod b}.
using ResidueHistogram = std::vector<std::uint64_t>;

namespace serial {

/// c[k] += c[k-m] for k ascending: multiplication by 1/(1-q^m).
void divide_by_one_minus_qm(std::span<mpz_class> coeffs, int m);

/// c[k] -= c[k-m] for k descending: multiplication by (1-q^m).
void multiply_by_one_minus_qm(std::span<mpz_class> coeffs, int m);

/// prod_{m=1}^{N} (1 - q^m)^{-t} truncated at q^N.
std::vector<mpz_class> eta_inverse_power(int t, int truncation);

ResidueHistogram hook_residue_histogram(int n, int t, int b);

}  // namespace serial

namespace parallel {

/// Residue classes mod m are independent chains; they are spread over
/// threads once m is large enough to pay for the fork.
void divide_by_one_minus_qm(std::span<mpz_class> coeffs, int m);
void multiply_by_one_minus_qm(std::span<mpz_class> coeffs, int m);

std::vector<mpz_class> eta_inverse_power(int t, int truncation);

/// Work is split by the largest part, one enumeration subtree per task.
ResidueHistogram hook_residue_histogram(int n, int t, int b);

}  // namespace parallel

/// Threads OpenMP regions will use (omp_get_max_threads).
int max_threads();
/// Sets the OpenMP thread count for subsequent regions; k <= 0 is ignored.
void set_threads(int k);

}  // namespace thooks::kernels
