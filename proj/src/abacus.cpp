#include "thooks/abacus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace thooks {

namespace {

void require_runners(int t) {
  if (t < 2) throw std::domain_error("abacus: runner count t must be at least 2");
}

// Decodes decreasing beta-numbers with bead count s = values.size().
Partition decode_beta(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  const int s = static_cast<int>(values.size());
  std::vector<int> parts;
  for (int i = 1; i <= s; ++i) {
    const int part = values[static_cast<std::size_t>(i - 1)] + i - s;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace

StructureNumbers structure_numbers(const Partition& p, std::optional<int> pad_to) {
  const int s = pad_to.value_or(p.length());
  if (s < p.length())
    throw std::domain_error("structure_numbers: bead count " + std::to_string(s) +
                            " is smaller than the number of parts");
  StructureNumbers out;
  out.values.reserve(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) out.values.push_back(p.part(i) - i + s);
  return out;
}

Abacus::Abacus(int runners, std::set<Bead> beads) : runners_(runners), beads_(std::move(beads)) {
  require_runners(runners_);
  for (const auto& b : beads_) {
    if (b.row < 1 || b.col < 0 || b.col >= runners_)
      throw std::domain_error("abacus: bead outside the abacus");
  }
}

Abacus Abacus::from_structure_numbers(int runners, const std::vector<int>& values) {
  require_runners(runners);
  std::set<Bead> beads;
  for (int v : values) {
    if (v < 0) throw std::domain_error("abacus: structure numbers must be non-negative");
    Bead b{v / runners + 1, v % runners};
    if (!beads.insert(b).second) throw std::domain_error("abacus: repeated structure number");
  }
  return Abacus(runners, std::move(beads));
}

StructureNumbers Abacus::structure_numbers() const {
  StructureNumbers out;
  out.values.reserve(beads_.size());
  for (const auto& b : beads_) out.values.push_back(position_of(b));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

std::vector<int> Abacus::column_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(runners_), 0);
  for (const auto& b : beads_) ++counts[static_cast<std::size_t>(b.col)];
  return counts;
}

bool Abacus::gapless() const {
  std::vector<int> deepest(static_cast<std::size_t>(runners_), 0);
  for (const auto& b : beads_)
    deepest[static_cast<std::size_t>(b.col)] = std::max(deepest[static_cast<std::size_t>(b.col)], b.row);
  return deepest == column_counts();
}

int padded_bead_count(const Partition& p, int t) {
  require_runners(t);
  return (p.length() + t - 1) / t * t;
}

Abacus abacus_from_partition(const Partition& p, int t, std::optional<int> bead_count) {
  require_runners(t);
  const int s = bead_count.value_or(padded_bead_count(p, t));
  return Abacus::from_structure_numbers(t, structure_numbers(p, s).values);
}

Partition partition_from_abacus(const Abacus& abacus) {
  return decode_beta(abacus.structure_numbers().values);
}

Abacus slide_bead(const Abacus& abacus, Bead bead) {
  if (!abacus.occupied(bead)) throw PreconditionError("slide_bead: no bead at that position");
  if (bead.row < 2) throw PreconditionError("slide_bead: bead is already in the top row");
  const Bead target{bead.row - 1, bead.col};
  if (abacus.occupied(target)) throw PreconditionError("slide_bead: target position is occupied");
  auto beads = abacus.beads();
  beads.erase(bead);
  beads.insert(target);
  return Abacus(abacus.runners(), std::move(beads));
}

Abacus compact_abacus(const Abacus& abacus) {
  // Runners left to right; within a runner, beads settle bottom to top.
  const auto counts = abacus.column_counts();
  return core_abacus(counts);
}

Partition t_core(const Partition& p, int t) {
  return partition_from_abacus(compact_abacus(abacus_from_partition(p, t)));
}

Abacus core_abacus(const std::vector<int>& column_counts) {
  const int t = static_cast<int>(column_counts.size());
  require_runners(t);
  std::set<Bead> beads;
  for (int c = 0; c < t; ++c) {
    if (column_counts[static_cast<std::size_t>(c)] < 0)
      throw std::domain_error("core_abacus: negative bead count");
    for (int r = 1; r <= column_counts[static_cast<std::size_t>(c)]; ++r) beads.insert(Bead{r, c});
  }
  return Abacus(t, std::move(beads));
}

std::vector<int> shift_forward(const std::vector<int>& column_counts) {
  std::vector<int> out(column_counts.size());
  out[0] = column_counts.back() + 1;
  std::copy(column_counts.begin(), column_counts.end() - 1, out.begin() + 1);
  return out;
}

std::vector<int> shift_backward(const std::vector<int>& column_counts) {
  if (column_counts.empty() || column_counts.front() < 1)
    throw std::domain_error("shift_backward: runner 0 is empty");
  std::vector<int> out(column_counts.begin() + 1, column_counts.end());
  out.push_back(column_counts.front() - 1);
  return out;
}

CanonicalCoreAbacus canonicalize_core_abacus(const Abacus& abacus) {
  if (!abacus.gapless())
    throw std::domain_error("canonicalize_core_abacus: abacus has a gap, not a t-core");
  auto counts = abacus.column_counts();
  while (counts.front() > 0) counts = shift_backward(counts);
  return CanonicalCoreAbacus{std::move(counts)};
}

Partition partition_from_canonical(const CanonicalCoreAbacus& canonical) {
  return partition_from_abacus(core_abacus(canonical.column_counts));
}

long long core_size(const std::vector<int>& column_counts) {
  const long long t = static_cast<long long>(column_counts.size());
  long long beta_sum = 0;
  long long s = 0;
  for (std::size_t c = 0; c < column_counts.size(); ++c) {
    const long long a = column_counts[c];
    beta_sum += t * a * (a - 1) / 2 + static_cast<long long>(c) * a;
    s += a;
  }
  return beta_sum - s * (s - 1) / 2;
}

int CoreQuotient::quotient_size() const noexcept {
  int total = 0;
  for (const auto& q : quotient) total += q.size();
  return total;
}

CoreQuotient decompose(const Abacus& abacus) {
  const int t = abacus.runners();
  CoreQuotient out;
  out.t = t;
  out.core = partition_from_abacus(compact_abacus(abacus));

  std::vector<std::vector<int>> runner_betas(static_cast<std::size_t>(t));
  for (const auto& b : abacus.beads()) runner_betas[static_cast<std::size_t>(b.col)].push_back(b.row - 1);
  out.quotient.reserve(static_cast<std::size_t>(t));
  for (auto& betas : runner_betas) out.quotient.push_back(decode_beta(std::move(betas)));
  return out;
}

CoreQuotient decompose(const Partition& p, int t) { return decompose(abacus_from_partition(p, t)); }

Partition compose(const CoreQuotient& cq) {
  require_runners(cq.t);
  if (static_cast<int>(cq.quotient.size()) != cq.t)
    throw std::invalid_argument("compose: quotient must have exactly t components");
  if (count_t_hooks(cq.core, cq.t) != 0)
    throw std::domain_error("compose: core " + to_string(cq.core) + " is not a " +
                            std::to_string(cq.t) + "-core");

  const int t = cq.t;
  const int base = padded_bead_count(cq.core, t);
  auto counts = abacus_from_partition(cq.core, t, base).column_counts();
  int extra_rows = 0;
  for (int c = 0; c < t; ++c)
    extra_rows = std::max(extra_rows, cq.quotient[static_cast<std::size_t>(c)].length() -
                                          counts[static_cast<std::size_t>(c)]);
  // Padding by t beads adds one bead to every runner.
  for (auto& a : counts) a += extra_rows;

  std::vector<int> positions;
  for (int c = 0; c < t; ++c) {
    const auto betas = structure_numbers(cq.quotient[static_cast<std::size_t>(c)],
                                         counts[static_cast<std::size_t>(c)]);
    for (int beta : betas.values) positions.push_back(t * beta + c);
  }
  return partition_from_abacus(Abacus::from_structure_numbers(t, positions));
}

}  // namespace thooks
