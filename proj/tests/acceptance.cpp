// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thooks/abacus.hpp"
#include "thooks/cores.hpp"
#include "thooks/distribution.hpp"
#include "thooks/nekrasov.hpp"
#include "thooks/partition.hpp"

using namespace thooks;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// "0.6977" -> 6977
long ten_thousandths(const std::string& s) {
  const auto dot = s.find('.');
  return std::stol(s.substr(0, dot)) * 10000 + std::stol(s.substr(dot + 1));
}

Outcome table_reproduction() {
  struct Row {
    int n;
    const char* a0;
    const char* a1;
  };
  const std::vector<Row> published{{300, "0.7347", "0.2653"}, {600, "0.6977", "0.3022"},
                                   {900, "0.6837", "0.3163"}, {4500, "0.6669", "0.3330"},
                                   {4800, "0.6669", "0.3330"}, {5100, "0.6668", "0.3331"}};
  const auto start = Clock::now();
  const HookStatistics stats(2, 5100);
  Outcome out;
  int exact = 0;
  for (const auto& row : published) {
    const auto profile = stats.profile(3, row.n);
    const std::string ours[2] = {profile.proportion(0), profile.proportion(1)};
    const char* theirs[2] = {row.a0, row.a1};
    for (int a = 0; a < 2; ++a) {
      const long diff = std::labs(ten_thousandths(ours[a]) - ten_thousandths(theirs[a]));
      if (diff == 0) ++exact;
      if (diff > 1) {
        out.pass = false;
        out.detail += " n=" + std::to_string(row.n) + " a=" + std::to_string(a) + ": " + ours[a] + " vs " + theirs[a];
      }
    }
    if (profile.counts[2] != 0) {
      out.pass = false;
      out.detail += " n=" + std::to_string(row.n) + " a=2 nonzero";
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60) out.pass = false;
  std::ostringstream d;
  d << exact << "/12 proportions exact, rest within 1 ulp; a=2 column zero; " << std::fixed << std::setprecision(2)
    << elapsed << "s" << out.detail;
  out.detail = d.str();
  return out;
}

Outcome vanishing_part1() {
  const auto start = Clock::now();
  const HookStatistics stats(2, 2000);
  int cells = 0, failures = 0;
  for (std::int64_t ell : {3, 5, 7, 11, 13})
    for (const auto& v : sweep_theorem_part1(ell, 2000, stats)) {
      if (v.kind == VerdictKind::hypothesis_not_met) continue;
      ++cells;
      if (v.kind == VerdictKind::counterexample) ++failures;
    }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << cells << " hypothesis cells, " << failures << " counterexamples, " << std::fixed << std::setprecision(2)
    << elapsed << "s";
  return {failures == 0 && cells > 0 && elapsed < 30, d.str()};
}

Outcome vanishing_part2() {
  const auto start = Clock::now();
  const HookStatistics stats(3, 2000);
  int cells = 0, failures = 0;
  for (std::int64_t ell : {2, 5, 11})
    for (const auto& v : sweep_theorem_part2(ell, 2000, stats)) {
      if (v.kind == VerdictKind::hypothesis_not_met) continue;
      ++cells;
      if (v.kind == VerdictKind::counterexample) ++failures;
    }
  std::ostringstream d;
  d << cells << " hypothesis cells, " << failures << " counterexamples, " << std::fixed << std::setprecision(2)
    << seconds_since(start) << "s";
  return {failures == 0 && cells > 0, d.str()};
}

Outcome oracle_equivalence() {
  int compared = 0, mismatches = 0;
  for (int t : {2, 3})
    for (int b : {2, 3, 5, 25})
      for (int n = 0; n <= 25; ++n) {
        ++compared;
        if (!(residue_profile(t, b, n) == brute_force_profile(t, b, n))) ++mismatches;
      }
  return {mismatches == 0, std::to_string(compared) + " profiles compared, " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome bijection_suite() {
  long checked = 0, failures = 0;
  for (int n = 0; n <= 18; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int t = 2; t <= 7; ++t) {
        ++checked;
        const auto cq = decompose(lambda, t);
        const bool ok = compose(cq) == lambda && cq.core.size() + t * cq.quotient_size() == n &&
                        cq.quotient_size() == count_t_hooks(lambda, t) && count_t_hooks(cq.core, t) == 0;
        if (!ok) ++failures;
      }
  return {failures == 0, std::to_string(checked) + " (partition, t) pairs, " + std::to_string(failures) + " failures"};
}

Outcome core_formulas() {
  int failures = 0;
  const auto c3_enum = count_t_cores_by_size(500, 3);
  const auto c2_enum = count_t_cores_by_size(500, 2);
  for (int n = 0; n <= 500; ++n) {
    const auto e3 = c3_enum[static_cast<std::size_t>(n)];
    if (c3_divisor_sum(n) != e3 || c3_qf_count(n) != e3) ++failures;
    if (c2(n) != c2_enum[static_cast<std::size_t>(n)]) ++failures;
  }
  for (int t = 2; t <= 7; ++t) {
    const auto series = ct_count_series(t, 200);
    const auto by_size = count_t_cores_by_size(200, t);
    for (int n = 0; n <= 200; ++n)
      if (series[n] != by_size[static_cast<std::size_t>(n)]) ++failures;
  }
  return {failures == 0, "c3 three-way and c2 for n<=500, c_t series for t<=7, n<=200; " +
                             std::to_string(failures) + " disagreements"};
}

Outcome nekrasov_okounkov() {
  const auto identity = check_no_identity(12);
  int failures = 0;
  for (int e : {1, 3}) {
    const auto values = specialize(12, mpq_class(e + 1));
    const auto expected = oracle::euler_product_power(e, 12);
    for (int m = 0; m <= 12; ++m)
      if (values[static_cast<std::size_t>(m)] != static_cast<long>(expected[static_cast<std::size_t>(m)])) ++failures;
  }
  std::string detail = identity.verified ? "identity exact for m<=12" : "identity fails at m=" +
                                                                           std::to_string(*identity.mismatch_m);
  detail += "; z=2, z=4 specializations: " + std::to_string(failures) + " mismatches";
  return {identity.verified && failures == 0, detail};
}

Outcome frt_sanity() {
  int failures = 0;
  try {
    for (int n = 0; n <= 14; ++n) {
      mpz_class total = 0;
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto d = representation_dimension(lambda);
        total += d * d;
      }
      if (total != oracle::factorial(n)) ++failures;
    }
  } catch (const std::logic_error& e) {
    return {false, std::string("non-integral dimension: ") + e.what()};
  }
  return {failures == 0, "sum of dim^2 = n! for n<=14; " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction},
      {"vanishing part 1", vanishing_part1},
      {"vanishing part 2", vanishing_part2},
      {"oracle equivalence", oracle_equivalence},
      {"bijection suite", bijection_suite},
      {"core formulas", core_formulas},
      {"hook-length product identity", nekrasov_okounkov},
      {"dimension sum", frt_sanity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << "criterion " << i + 1 << " " << (outcome.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << ": " << outcome.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
