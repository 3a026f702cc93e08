#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "thooks/kernels.hpp"
#include "thooks/series.hpp"

using namespace thooks;

namespace {

std::vector<mpz_class> random_coeffs(std::mt19937& rng, int n) {
  std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
  std::uniform_int_distribution<long> pick(-1000, 1000);
  for (auto& c : out) c = pick(rng);
  return out;
}

// Restores the OpenMP thread count on scope exit.
struct ThreadGuard {
  int saved = kernels::max_threads();
  explicit ThreadGuard(int k) { kernels::set_threads(k); }
  ~ThreadGuard() { kernels::set_threads(saved); }
};

}  // namespace

TEST_CASE("BigSeries basics") {
  const auto one = BigSeries::one(5);
  CHECK(one.truncation() == 5);
  CHECK(one[0] == 1);
  CHECK(one[3] == 0);
  CHECK(one[99] == 0);
  CHECK(one[-1] == 0);

  BigSeries s(std::vector<mpz_class>{1, 2, 3});
  CHECK((s + s)[2] == 6);
  const auto sq = s * s;
  CHECK(sq.truncation() == 2);
  CHECK(sq[0] == 1);
  CHECK(sq[1] == 4);
  CHECK(sq[2] == 10);
  CHECK(s.truncated(1).truncation() == 1);
  CHECK((s * BigSeries::one(10)) == s);
}

TEST_CASE("BigSeries product is commutative and associative") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const BigSeries a(random_coeffs(rng, 20)), b(random_coeffs(rng, 20)), c(random_coeffs(rng, 20));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("divide and multiply by (1 - q^m) are inverse") {
  std::mt19937 rng(11);
  for (int m : {1, 2, 5, 64, 100}) {
    const BigSeries original(random_coeffs(rng, 300));
    auto s = original;
    s.divide_by_one_minus_q_pow(m).multiply_by_one_minus_q_pow(m);
    CHECK(s == original);
  }
}

TEST_CASE("eta_inverse_power_series matches tuple counts") {
  CHECK(eta_inverse_power_series(2, 5)[2] == 5);
  for (int t = 1; t <= 7; ++t) {
    const auto series = eta_inverse_power_series(t, 60);
    const auto expected = oracle::tuple_counts(t, 60);
    CHECK(series[0] == 1);
    for (int k = 0; k <= 60; ++k) CHECK(series[k] == static_cast<long>(expected[static_cast<std::size_t>(k)]));
  }
  CHECK_THROWS_AS(eta_inverse_power_series(0, 5), std::domain_error);
}

TEST_CASE("eta_power_series matches direct expansion") {
  for (int e = 1; e <= 4; ++e) {
    const auto series = eta_power_series(e, 40);
    const auto expected = oracle::euler_product_power(e, 40);
    for (int k = 0; k <= 40; ++k) CHECK(series[k] == static_cast<long>(expected[static_cast<std::size_t>(k)]));
  }
  CHECK(eta_power_series(3, 30) * eta_inverse_power_series(3, 30) == BigSeries::one(30));
}

TEST_CASE("truncation does not change lower coefficients") {
  const auto big = eta_inverse_power_series(3, 200);
  const auto small = eta_inverse_power_series(3, 50);
  CHECK(big.truncated(50) == small);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  ThreadGuard guard(4);
  std::mt19937 rng(5);
  for (int m : {1, 3, 63, 64, 65, 200}) {
    const auto base = random_coeffs(rng, 1000);
    auto serial = base, parallel = base;
    kernels::serial::divide_by_one_minus_qm(serial, m);
    kernels::parallel::divide_by_one_minus_qm(parallel, m);
    CHECK(serial == parallel);
    kernels::serial::multiply_by_one_minus_qm(serial, m);
    kernels::parallel::multiply_by_one_minus_qm(parallel, m);
    CHECK(serial == parallel);
    CHECK(serial == base);
  }
  for (int t : {1, 2, 3, 7})
    CHECK(kernels::serial::eta_inverse_power(t, 500) == kernels::parallel::eta_inverse_power(t, 500));
  for (int n : {0, 1, 12, 20})
    for (int t : {2, 3})
      for (int b : {1, 3, 5})
        CHECK(kernels::serial::hook_residue_histogram(n, t, b) == kernels::parallel::hook_residue_histogram(n, t, b));
}

TEST_CASE("hook_residue_histogram totals p(n)") {
  const auto p = oracle::partition_numbers(22);
  for (int n = 0; n <= 22; ++n) {
    const auto hist = kernels::serial::hook_residue_histogram(n, 2, 4);
    CHECK(hist.size() == 4);
    std::uint64_t total = 0;
    for (auto c : hist) total += c;
    CHECK(static_cast<std::int64_t>(total) == p[static_cast<std::size_t>(n)]);
  }
}
