#include <doctest.h>

#include "oracles.hpp"
#include "thooks/errors.hpp"
#include "thooks/nekrasov.hpp"

using namespace thooks;

namespace {

mpq_class q(long num, long den = 1) {
  mpq_class r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("ZPolynomial arithmetic") {
  const auto one_minus_z = ZPolynomial::linear(1, -1);
  CHECK(one_minus_z.degree() == 1);
  CHECK(ZPolynomial().degree() == -1);
  CHECK(ZPolynomial().is_zero());
  CHECK(ZPolynomial({q(0), q(0)}).is_zero());
  CHECK((one_minus_z + ZPolynomial::linear(-1, 1)).is_zero());
  const auto sq = one_minus_z * one_minus_z;
  CHECK(sq == ZPolynomial({q(1), q(-2), q(1)}));
  CHECK(sq.evaluate(q(3)) == 4);
  CHECK(sq.coefficient(7) == 0);
  CHECK((sq * q(1, 2)).coefficient(1) == -1);
  CHECK(to_string(ZPolynomial({q(2), q(-5, 2), q(1, 2)})) == "2 - 5/2 z + 1/2 z^2");
  CHECK(to_string(ZPolynomial()) == "0");
}

TEST_CASE("no_rhs small cases") {
  CHECK(no_rhs(0) == ZPolynomial::constant(1));
  CHECK(no_rhs(1) == ZPolynomial::linear(1, -1));
  CHECK(no_rhs(2) == ZPolynomial::linear(1, -1) * ZPolynomial::linear(1, q(-1, 4)) * q(2));
  CHECK(to_string(no_rhs(2)) == "2 - 5/2 z + 1/2 z^2");
}

TEST_CASE("no_lhs small cases") {
  CHECK(no_lhs(0) == ZPolynomial::constant(1));
  CHECK(no_lhs(1) == ZPolynomial::linear(1, -1));
  CHECK(no_lhs(2) == no_rhs(2));
  const auto series = no_lhs_series(5);
  REQUIRE(series.size() == 6);
  for (int m = 0; m <= 5; ++m) CHECK(series[static_cast<std::size_t>(m)] == no_lhs(m));
}

TEST_CASE("shifted_binomial") {
  // binom(z-1, k) evaluated at integer z agrees with the integer binomial.
  CHECK(shifted_binomial(0) == ZPolynomial::constant(1));
  CHECK(shifted_binomial(1) == ZPolynomial::linear(-1, 1));
  CHECK(shifted_binomial(2).evaluate(6) == 10);
  CHECK(shifted_binomial(3).evaluate(3) == 0);
}

TEST_CASE("identity holds through the guard") {
  for (int m_max : {0, 8, 12}) {
    const auto check = check_no_identity(m_max);
    CHECK(check.verified);
    CHECK(check.m_max == m_max);
    CHECK_FALSE(check.mismatch_m.has_value());
  }
}

TEST_CASE("coefficient degree bound and constant term") {
  const auto p = oracle::partition_numbers(12);
  for (int m = 0; m <= 12; ++m) {
    const auto rhs = no_rhs(m);
    CHECK(rhs.degree() == m);
    CHECK(no_lhs(m).degree() <= m);
    CHECK(rhs.coefficient(0) == static_cast<long>(p[static_cast<std::size_t>(m)]));
    // z = 1 kills every nonempty term on both sides.
    CHECK(rhs.evaluate(1) == (m == 0 ? 1 : 0));
  }
}

TEST_CASE("specializations match integer products") {
  CHECK(specialize(1, q(2))[1] == -1);
  for (int e : {1, 2, 3}) {
    const auto values = specialize(12, q(e + 1));
    const auto expected = oracle::euler_product_power(e, 12);
    REQUIRE(values.size() == 13);
    for (int m = 0; m <= 12; ++m)
      CHECK(values[static_cast<std::size_t>(m)] == static_cast<long>(expected[static_cast<std::size_t>(m)]));
  }
  const auto cubes = specialize(12, q(4));
  CHECK(cubes[1] == -3);
  CHECK(cubes[3] == 5);
  CHECK(cubes[6] == -7);
  CHECK(cubes[10] == 9);
  // z = 0 gives the partition numbers.
  const auto p = oracle::partition_numbers(12);
  const auto at_zero = specialize(12, q(0));
  for (int m = 0; m <= 12; ++m) CHECK(at_zero[static_cast<std::size_t>(m)] == static_cast<long>(p[static_cast<std::size_t>(m)]));
}

TEST_CASE("guard refuses large m unless overridden") {
  CHECK_THROWS_AS(no_rhs(kNekrasovGuard + 1), GuardExceeded);
  CHECK_THROWS_AS(no_lhs(kNekrasovGuard + 1), GuardExceeded);
  CHECK_THROWS_AS(check_no_identity(kNekrasovGuard + 1), GuardExceeded);
  CHECK_THROWS_AS(specialize(kNekrasovGuard + 1, q(2)), GuardExceeded);
  CHECK(check_no_identity(14, true).verified);
}
