#include "thooks/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thooks/abacus.hpp"
#include "thooks/cores.hpp"
#include "thooks/distribution.hpp"
#include "thooks/kernels.hpp"
#include "thooks/nekrasov.hpp"
#include "thooks/partition.hpp"

namespace thooks::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, csv, json };

struct Options {
  std::optional<Format> format;
  std::string out_path;
  int threads = 0;

  std::string partition;
  std::vector<int> t_values;
  int t = 2;
  int a = 0;
  int b = 3;
  std::vector<int> n_values;
  std::optional<int> n_max;
  int m_max = kNekrasovGuard;
  std::optional<long long> ell;
  std::optional<long long> a1;
  std::optional<long long> a2;
  std::string theorem;
  bool allow_large = false;
  bool witnesses = false;
};

struct Result {
  int code = kOk;
  std::string body;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json parts_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

std::string show(const Partition& p) { return p.empty() ? "∅" : "(" + to_string(p) + ")"; }

std::string join_ints(const std::vector<int>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// ---------------------------------------------------------------- hooks

Result cmd_hooks(const Options& opt, Format fmt) {
  const auto p = parse_partition(opt.partition);
  for (int t : opt.t_values) require(t >= 2, "--t must be at least 2");
  const auto table = hook_table(p);
  const auto multiset = hook_multiset(p);
  const auto dim = representation_dimension(p);

  std::ostringstream os;
  if (fmt == Format::json) {
    json j;
    j["partition"] = parts_json(p);
    j["size"] = p.size();
    j["rows"] = table;
    j["multiset"] = std::vector<int>(multiset.entries().begin(), multiset.entries().end());
    j["t_hooks"] = json::array();
    for (int t : opt.t_values) j["t_hooks"].push_back({{"t", t}, {"count", count_t_hooks(p, t)}});
    j["dimension"] = dim.get_str();
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    os << "row,column,hook\n";
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table[i].size(); ++j) os << i + 1 << ',' << j + 1 << ',' << table[i][j] << '\n';
  } else {
    for (const auto& row : table) os << join_ints(row, " ") << '\n';
    os << "multiset: " << join_ints({multiset.entries().begin(), multiset.entries().end()}, " ") << '\n';
    for (int t : opt.t_values) os << "h_" << t << " = " << count_t_hooks(p, t) << '\n';
    os << "dim = " << dim.get_str() << '\n';
  }
  return {kOk, os.str()};
}

// ------------------------------------------------------------ decompose

Result cmd_decompose(const Options& opt, Format fmt) {
  const auto p = parse_partition(opt.partition);
  require(opt.t >= 2, "--t must be at least 2");
  const int t = opt.t;
  const auto cq = decompose(p, t);
  const int hooks = count_t_hooks(p, t);
  const bool ok = p.size() == cq.total_size() && hooks == cq.quotient_size() && compose(cq) == p;
  const std::string check = std::to_string(p.size()) + " = " + std::to_string(cq.core.size()) + " + " +
                            std::to_string(t) + "·" + std::to_string(cq.quotient_size()) +
                            (ok ? " ✓" : " ✗");

  std::ostringstream os;
  if (fmt == Format::json) {
    json j;
    j["partition"] = parts_json(p);
    j["size"] = p.size();
    j["t"] = t;
    j["bead_count"] = padded_bead_count(p, t);
    j["core"] = parts_json(cq.core);
    j["core_size"] = cq.core.size();
    j["quotient"] = json::array();
    j["quotient_sizes"] = json::array();
    for (const auto& q : cq.quotient) {
      j["quotient"].push_back(parts_json(q));
      j["quotient_sizes"].push_back(q.size());
    }
    j["quotient_total"] = cq.quotient_size();
    j["t_hooks"] = hooks;
    j["check"] = check;
    j["check_passed"] = ok;
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    os << "component,partition,size\n";
    os << "core,\"" << to_string(cq.core) << "\"," << cq.core.size() << '\n';
    for (std::size_t c = 0; c < cq.quotient.size(); ++c)
      os << c << ",\"" << to_string(cq.quotient[c]) << "\"," << cq.quotient[c].size() << '\n';
  } else {
    os << "core: " << show(cq.core) << '\n';
    os << "quotient:";
    for (const auto& q : cq.quotient) os << ' ' << show(q);
    os << '\n' << check << '\n';
  }
  return {ok ? kOk : kCounterexample, os.str()};
}

// ----------------------------------------------------------------- core

Result cmd_core(const Options& opt, Format fmt) {
  const auto p = parse_partition(opt.partition);
  require(opt.t >= 2, "--t must be at least 2");
  const int t = opt.t;
  const auto core = t_core(p, t);
  const auto canonical = canonicalize_core_abacus(compact_abacus(abacus_from_partition(p, t)));

  std::ostringstream os;
  if (fmt == Format::json) {
    json j;
    j["partition"] = parts_json(p);
    j["t"] = t;
    j["core"] = parts_json(core);
    j["core_size"] = core.size();
    j["removed_hooks"] = (p.size() - core.size()) / t;
    j["canonical_abacus"] = canonical.column_counts;
    os << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    os << "partition,t,core,core_size,canonical_abacus\n";
    os << '"' << to_string(p) << "\"," << t << ",\"" << to_string(core) << "\"," << core.size() << ",\""
       << join_ints(canonical.column_counts, ",") << "\"\n";
  } else {
    os << t << "-core of " << show(p) << ": " << show(core) << '\n';
    os << "rim " << t << "-hooks removed: " << (p.size() - core.size()) / t << '\n';
    os << "canonical abacus: (" << join_ints(canonical.column_counts, ",") << ")\n";
  }
  return {kOk, os.str()};
}

// ---------------------------------------------------------- cores-count

Result cmd_cores_count(const Options& opt, Format fmt) {
  require(opt.t >= 2, "--t must be at least 2");
  const int t = opt.t;
  std::vector<int> ns = opt.n_values;
  if (opt.n_max) {
    require(*opt.n_max >= 0, "--nmax must be non-negative");
    for (int n = 0; n <= *opt.n_max; ++n) ns.push_back(n);
  }
  require(!ns.empty(), "cores-count needs --n or --nmax");
  int top = 0;
  for (int n : ns) {
    require(n >= 0, "--n must be non-negative");
    top = std::max(top, n);
  }
  const auto by_abacus = count_t_cores_by_size(top, t);
  const auto series = ct_count_series(t, top);

  bool consistent = true;
  json rows = json::array();
  std::ostringstream os;
  if (fmt == Format::csv) os << "n,t,abacus,series,closed_form,quadratic_form\n";
  for (int n : ns) {
    const auto abacus = by_abacus[static_cast<std::size_t>(n)];
    const auto& from_series = series[n];
    std::optional<std::int64_t> closed;
    std::optional<std::int64_t> qf;
    if (t == 2) closed = c2(n);
    if (t == 3) {
      closed = c3_divisor_sum(n);
      qf = c3_qf_count(n);
    }
    bool agree = from_series == abacus && (!closed || *closed == abacus) && (!qf || *qf == abacus);
    consistent = consistent && agree;

    if (fmt == Format::json) {
      json row{{"n", n}, {"t", t}, {"abacus", abacus}, {"series", from_series.get_str()}};
      row["closed_form"] = closed ? json(*closed) : json(nullptr);
      row["quadratic_form"] = qf ? json(*qf) : json(nullptr);
      row["agree"] = agree;
      if (opt.witnesses) {
        row["witnesses"] = json::array();
        for (const auto& core : enumerate_t_cores(n, t)) row["witnesses"].push_back(parts_json(core));
      }
      rows.push_back(std::move(row));
    } else if (fmt == Format::csv) {
      os << n << ',' << t << ',' << abacus << ',' << from_series.get_str() << ','
         << (closed ? std::to_string(*closed) : "") << ',' << (qf ? std::to_string(*qf) : "") << '\n';
    } else {
      os << "c_" << t << "(" << n << ") = " << abacus << "  [series " << from_series.get_str();
      if (t == 2) os << ", 8n+1 square " << *closed;
      if (t == 3) os << ", divisor sum " << *closed << ", quadratic form " << *qf;
      os << "]" << (agree ? "" : "  MISMATCH") << '\n';
      if (opt.witnesses)
        for (const auto& core : enumerate_t_cores(n, t)) os << "  " << show(core) << '\n';
    }
  }
  if (fmt == Format::json) os << json{{"t", t}, {"agree", consistent}, {"rows", rows}}.dump(2) << '\n';
  return {consistent ? kOk : kCounterexample, os.str()};
}

// ---------------------------------------------------------------- table

Result cmd_table(const Options& opt, Format fmt) {
  require(opt.t >= 2, "--t must be at least 2");
  require(opt.b >= 1, "--b must be at least 1");
  std::vector<int> ns = opt.n_values.empty() ? default_table_rows() : opt.n_values;
  int top = 0;
  for (int n : ns) {
    require(n >= 0, "--n must be non-negative");
    top = std::max(top, n);
  }
  const HookStatistics stats(opt.t, top);

  std::ostringstream os;
  json rows = json::array();
  if (fmt == Format::csv) os << "n,a,count,proportion\n";
  if (fmt == Format::text) {
    os << "n";
    for (int a = 0; a < opt.b; ++a) os << "\tp_" << opt.t << "(" << a << "," << opt.b << ";n)";
    os << '\n';
  }
  for (int n : ns) {
    const auto profile = stats.profile(opt.b, n);
    if (fmt == Format::csv) {
      for (int a = 0; a < opt.b; ++a)
        os << n << ',' << a << ',' << profile.counts[static_cast<std::size_t>(a)].get_str() << ','
           << profile.proportion(a) << '\n';
    } else if (fmt == Format::json) {
      json counts = json::array();
      for (int a = 0; a < opt.b; ++a)
        counts.push_back({{"a", a},
                          {"count", profile.counts[static_cast<std::size_t>(a)].get_str()},
                          {"proportion", profile.proportion(a)}});
      rows.push_back({{"n", n}, {"total", profile.total.get_str()}, {"counts", counts}});
    } else {
      os << n;
      for (int a = 0; a < opt.b; ++a) os << '\t' << profile.proportion(a);
      os << '\n';
    }
  }
  if (fmt == Format::json) os << json{{"t", opt.t}, {"b", opt.b}, {"rows", rows}}.dump(2) << '\n';
  return {kOk, os.str()};
}

// --------------------------------------------------------------- verify

json verdict_json(const Verdict& v) {
  json j{{"ell", v.ell}, {"a1", v.a1}, {"a2", v.a2}, {"n_max", v.n_max},
         {"checked", v.checked}, {"verdict", to_string(v.kind)}};
  if (v.counterexample) {
    j["counterexample_n"] = *v.counterexample;
    j["counterexample_count"] = v.counterexample_count->get_str();
  }
  return j;
}

std::string verdict_line(const std::string& theorem, const Verdict& v) {
  std::ostringstream os;
  os << theorem << " ell=" << v.ell << " a1=" << v.a1 << " a2=" << v.a2 << " n<=" << v.n_max
     << " checked=" << v.checked << ' ' << to_string(v.kind);
  if (v.counterexample)
    os << " at n=" << *v.counterexample << " (count " << v.counterexample_count->get_str() << ")";
  return os.str();
}

Result verify_vanishing(const Options& opt, Format fmt, bool part1) {
  const int n_max = opt.n_max.value_or(2000);
  require(n_max >= 0, "--nmax must be non-negative");
  require(opt.a1.has_value() == opt.a2.has_value(), "--a1 and --a2 go together");
  std::vector<long long> ells;
  if (opt.ell) {
    ells.push_back(*opt.ell);
  } else if (part1) {
    ells = {3, 5, 7, 11, 13};
  } else {
    ells = {2, 5, 11};
  }
  for (long long ell : ells) {
    if (part1) require(ell >= 3 && is_prime(ell), "--ell must be an odd prime for part1");
    else require(is_prime(ell) && ell % 3 == 2, "--ell must be a prime = 2 mod 3 for part2");
  }

  const HookStatistics stats(part1 ? 2 : 3, n_max);
  std::vector<Verdict> verdicts;
  for (long long ell : ells) {
    if (opt.a1) {
      verdicts.push_back(part1 ? verify_theorem_part1(ell, *opt.a1, *opt.a2, n_max, &stats)
                               : verify_theorem_part2(ell, *opt.a1, *opt.a2, n_max, &stats));
    } else {
      auto cells = part1 ? sweep_theorem_part1(ell, n_max, stats) : sweep_theorem_part2(ell, n_max, stats);
      verdicts.insert(verdicts.end(), cells.begin(), cells.end());
    }
  }

  const std::string name = part1 ? "part1" : "part2";
  int met = 0;
  int failures = 0;
  json cells = json::array();
  std::ostringstream os;
  if (fmt == Format::csv) os << "theorem,ell,a1,a2,n_max,checked,verdict,counterexample_n\n";
  for (const auto& v : verdicts) {
    if (v.kind == VerdictKind::hypothesis_not_met) continue;
    ++met;
    if (v.kind == VerdictKind::counterexample) ++failures;
    if (fmt == Format::json) cells.push_back(verdict_json(v));
    else if (fmt == Format::csv)
      os << name << ',' << v.ell << ',' << v.a1 << ',' << v.a2 << ',' << v.n_max << ',' << v.checked << ','
         << to_string(v.kind) << ',' << (v.counterexample ? std::to_string(*v.counterexample) : "") << '\n';
    else os << verdict_line(name, v) << '\n';
  }
  if (fmt == Format::json) {
    os << json{{"theorem", name},
               {"n_max", n_max},
               {"cells_with_hypothesis", met},
               {"counterexamples", failures},
               {"verified", failures == 0},
               {"cells", cells}}
              .dump(2)
       << '\n';
  } else if (fmt == Format::text) {
    os << name << ": " << met << " cells with hypothesis met, " << failures << " counterexamples\n";
    if (opt.a1 && met == 0) os << "hypothesis not met; nothing to verify\n";
  }
  return {failures == 0 ? kOk : kCounterexample, os.str()};
}

Result verify_no_identity(const Options& opt, Format fmt) {
  const auto result = check_no_identity(opt.m_max, opt.allow_large);
  std::ostringstream os;
  if (fmt == Format::json) {
    json j{{"theorem", "no-identity"}, {"m_max", opt.m_max}, {"verified", result.verified}};
    if (!result.verified) j["mismatch"] = {{"m", *result.mismatch_m}, {"z_degree", *result.mismatch_degree}};
    os << j.dump(2) << '\n';
  } else {
    if (fmt == Format::csv) os << "theorem,m_max,verified,mismatch_m,mismatch_degree\n";
    if (fmt == Format::csv)
      os << "no-identity," << opt.m_max << ',' << (result.verified ? "true" : "false") << ','
         << (result.mismatch_m ? std::to_string(*result.mismatch_m) : "") << ','
         << (result.mismatch_degree ? std::to_string(*result.mismatch_degree) : "") << '\n';
    else if (result.verified)
      os << "no-identity: both sides agree for every m <= " << opt.m_max << '\n';
    else
      os << "no-identity: COUNTEREXAMPLE at m=" << *result.mismatch_m << ", z-degree "
         << *result.mismatch_degree << '\n';
  }
  return {result.verified ? kOk : kCounterexample, os.str()};
}

Result verify_core_formulas(const Options& opt, Format fmt) {
  const int n_max = opt.n_max.value_or(500);
  require(n_max >= 0, "--nmax must be non-negative");
  const int series_max = std::min(n_max, 200);

  struct Failure {
    std::string what;
    int n;
  };
  std::vector<Failure> failures;
  const auto threes = count_t_cores_by_size(n_max, 3);
  const auto twos = count_t_cores_by_size(n_max, 2);
  for (int n = 0; n <= n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const auto divisor = c3_divisor_sum(n);
    if (divisor != c3_qf_count(n) || divisor != threes[idx]) failures.push_back({"c3 three-way", n});
    if (c3_nonvanishing(n) != (divisor > 0)) failures.push_back({"c3 nonvanishing", n});
    if (c2(n) != twos[idx]) failures.push_back({"c2", n});
  }
  for (int t = 2; t <= 7; ++t) {
    const auto series = ct_count_series(t, series_max);
    const auto counts = count_t_cores_by_size(series_max, t);
    for (int n = 0; n <= series_max; ++n)
      if (series[n] != counts[static_cast<std::size_t>(n)])
        failures.push_back({"c_" + std::to_string(t) + " series", n});
  }

  std::ostringstream os;
  if (fmt == Format::json) {
    json fails = json::array();
    for (const auto& f : failures) fails.push_back({{"check", f.what}, {"n", f.n}});
    os << json{{"theorem", "core-formulas"},
               {"n_max", n_max},
               {"series_n_max", series_max},
               {"verified", failures.empty()},
               {"failures", fails}}
              .dump(2)
       << '\n';
  } else if (fmt == Format::csv) {
    os << "check,n\n";
    for (const auto& f : failures) os << f.what << ',' << f.n << '\n';
  } else {
    os << "c3: divisor sum = quadratic form = abacus count for n <= " << n_max << '\n';
    os << "c2: 8n+1 square test = abacus count for n <= " << n_max << '\n';
    os << "c_t series = abacus count for t = 2..7, n <= " << series_max << '\n';
    for (const auto& f : failures) os << "COUNTEREXAMPLE " << f.what << " at n=" << f.n << '\n';
    os << "core-formulas: " << (failures.empty() ? "verified" : "FAILED") << '\n';
  }
  return {failures.empty() ? kOk : kCounterexample, os.str()};
}

Result cmd_verify(const Options& opt, Format fmt) {
  if (opt.theorem == "part1") return verify_vanishing(opt, fmt, true);
  if (opt.theorem == "part2") return verify_vanishing(opt, fmt, false);
  if (opt.theorem == "no-identity") return verify_no_identity(opt, fmt);
  if (opt.theorem == "core-formulas") return verify_core_formulas(opt, fmt);
  throw UsageError("unknown theorem '" + opt.theorem + "'");
}

// ------------------------------------------------------------- no-check

Result cmd_no_check(const Options& opt, Format fmt) {
  const auto lhs = no_lhs_series(opt.m_max, opt.allow_large);
  const auto euler = specialize(opt.m_max, 2, opt.allow_large);
  const auto jacobi = specialize(opt.m_max, 4, opt.allow_large);
  bool all_equal = true;

  std::ostringstream os;
  json rows = json::array();
  if (fmt == Format::csv) os << "m,product_side,hook_side,equal,z2,z4\n";
  for (int m = 0; m <= opt.m_max; ++m) {
    const auto rhs = no_rhs(m, opt.allow_large);
    const auto& left = lhs[static_cast<std::size_t>(m)];
    const bool equal = left == rhs;
    all_equal = all_equal && equal;
    const auto idx = static_cast<std::size_t>(m);
    if (fmt == Format::json) {
      rows.push_back({{"m", m},
                      {"product_side", to_string(left)},
                      {"hook_side", to_string(rhs)},
                      {"equal", equal},
                      {"z2", euler[idx].get_str()},
                      {"z4", jacobi[idx].get_str()}});
    } else if (fmt == Format::csv) {
      os << m << ",\"" << to_string(left) << "\",\"" << to_string(rhs) << "\"," << (equal ? "true" : "false")
         << ',' << euler[idx].get_str() << ',' << jacobi[idx].get_str() << '\n';
    } else {
      os << "q^" << m << ": " << to_string(rhs) << (equal ? "  [sides agree]" : "  [MISMATCH: " + to_string(left) + "]")
         << '\n';
    }
  }
  if (fmt == Format::json) {
    os << json{{"m_max", opt.m_max}, {"verified", all_equal}, {"rows", rows}}.dump(2) << '\n';
  } else if (fmt == Format::text) {
    os << "z=2:";
    for (const auto& v : euler) os << ' ' << v.get_str();
    os << "\nz=4:";
    for (const auto& v : jacobi) os << ' ' << v.get_str();
    os << '\n';
  }
  return {all_equal ? kOk : kCounterexample, os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hook-length statistics, t-cores and t-quotients of integer partitions", "thooks"};
  app.require_subcommand(1);

  std::string format_name;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--out", opt.out_path, "Write output to PATH instead of standard output");
    sub->add_option("--threads", opt.threads, "OpenMP worker threads")->check(CLI::NonNegativeNumber);
  };

  auto* hooks = app.add_subcommand("hooks", "Hook lengths of a partition");
  hooks->add_option("partition", opt.partition, "Comma-separated parts, e.g. 3,2,1")->required();
  hooks->add_option("-t,--t", opt.t_values, "Report h_t for these t")->delimiter(',');
  add_common(hooks);

  auto* decompose_cmd = app.add_subcommand("decompose", "t-core and t-quotient of a partition");
  decompose_cmd->add_option("partition", opt.partition, "Comma-separated parts")->required();
  decompose_cmd->add_option("-t,--t", opt.t, "Number of runners")->required();
  add_common(decompose_cmd);

  auto* core_cmd = app.add_subcommand("core", "t-core of a partition and its canonical abacus");
  core_cmd->add_option("partition", opt.partition, "Comma-separated parts")->required();
  core_cmd->add_option("-t,--t", opt.t, "Number of runners")->required();
  add_common(core_cmd);

  auto* cores_count = app.add_subcommand("cores-count", "Count t-core partitions of n by several methods");
  cores_count->add_option("-t,--t", opt.t, "t")->required();
  cores_count->add_option("-n,--n", opt.n_values, "Sizes to count")->delimiter(',');
  cores_count->add_option("--nmax", opt.n_max, "Count every size 0..nmax");
  cores_count->add_flag("--witnesses", opt.witnesses, "List the cores themselves");
  add_common(cores_count);

  auto* table = app.add_subcommand("table", "Residue profile p_t(a,b;n) for a = 0..b-1");
  table->add_option("-t,--t", opt.t, "t")->capture_default_str();
  table->add_option("-b,--b", opt.b, "Modulus b")->capture_default_str();
  table->add_option("-n,--n", opt.n_values, "Sizes (default 300,600,900,4500,4800,5100)")->delimiter(',');
  add_common(table);

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("theorem", opt.theorem, "part1 | part2 | no-identity | core-formulas")
      ->required()
      ->check(CLI::IsMember({"part1", "part2", "no-identity", "core-formulas"}));
  verify->add_option("--ell", opt.ell, "Prime ell (default: all of the standard range)");
  verify->add_option("--a1", opt.a1, "Hook-count residue a1");
  verify->add_option("--a2", opt.a2, "Size residue a2");
  verify->add_option("--nmax", opt.n_max, "Largest n to check");
  verify->add_option("--mmax", opt.m_max, "Largest q-degree for no-identity")->capture_default_str();
  verify->add_flag("--allow-large", opt.allow_large, "Lift the q-degree guard");
  add_common(verify);

  auto* no_check = app.add_subcommand("no-check", "Print both sides of the hook-length product identity");
  no_check->add_option("--mmax", opt.m_max, "Largest q-degree")->capture_default_str();
  no_check->add_flag("--allow-large", opt.allow_large, "Lift the q-degree guard");
  add_common(no_check);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (!format_name.empty())
    opt.format = format_name == "csv" ? Format::csv : format_name == "json" ? Format::json : Format::text;
  kernels::set_threads(opt.threads);

  Result result;
  try {
    auto pick = [&](Format fallback) { return opt.format.value_or(fallback); };
    if (hooks->parsed()) result = cmd_hooks(opt, pick(Format::text));
    else if (decompose_cmd->parsed()) result = cmd_decompose(opt, pick(Format::json));
    else if (core_cmd->parsed()) result = cmd_core(opt, pick(Format::text));
    else if (cores_count->parsed()) result = cmd_cores_count(opt, pick(Format::text));
    else if (table->parsed()) result = cmd_table(opt, pick(Format::csv));
    else if (verify->parsed()) result = cmd_verify(opt, pick(Format::text));
    else if (no_check->parsed()) result = cmd_no_check(opt, pick(Format::text));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "refused: " << e.what() << " (pass --allow-large to override)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (opt.out_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << opt.out_path << " for writing\n";
      return kUsage;
    }
    file << result.body;
  }
  return result.code;
}

}  // namespace thooks::cli
