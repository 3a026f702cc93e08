#pragma once

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "thooks/errors.hpp"
#include "thooks/partition.hpp"

namespace thooks {

/// Beta-numbers B_i = lambda_i - i + s for a chosen bead count s.
/// Strictly decreasing; values.size() is the bead count.
struct StructureNumbers {
  std::vector<int> values;

  int bead_count() const noexcept { return static_cast<int>(values.size()); }
  friend bool operator==(const StructureNumbers&, const StructureNumbers&) = default;
};

/// With pad_to unset, s is the number of parts. Throws std::domain_error
/// if pad_to is smaller than the number of parts.
StructureNumbers structure_numbers(const Partition& p, std::optional<int> pad_to = std::nullopt);

/// Bead position: 1-based row, 0-based runner (column).
struct Bead {
  int row = 1;
  int col = 0;

  friend auto operator<=>(const Bead&, const Bead&) = default;
};

/// A t-runner abacus. A bead at (r,c) encodes B = t(r-1) + c.
class Abacus {
 public:
  /// Throws std::domain_error for t < 2 or a bead outside the abacus.
  Abacus(int runners, std::set<Bead> beads = {});

  /// Places beads for an explicit set of distinct non-negative structure
  /// numbers.
  static Abacus from_structure_numbers(int runners, const std::vector<int>& values);

  int runners() const noexcept { return runners_; }
  const std::set<Bead>& beads() const noexcept { return beads_; }
  int bead_count() const noexcept { return static_cast<int>(beads_.size()); }
  bool occupied(Bead b) const { return beads_.contains(b); }

  /// Decoded structure numbers, decreasing.
  StructureNumbers structure_numbers() const;

  /// Bead count on each runner.
  std::vector<int> column_counts() const;

  /// True when every runner holds beads exactly in rows 1..count.
  bool gapless() const;

  int position_of(Bead b) const noexcept { return runners_ * (b.row - 1) + b.col; }
  Bead bead_at(int position) const noexcept {
    return Bead{position / runners_ + 1, position % runners_};
  }

  friend bool operator==(const Abacus&, const Abacus&) = default;

 private:
  int runners_;
  std::set<Bead> beads_;
};

/// Bead count for the default convention: the least multiple of t that is
/// at least the number of parts.
int padded_bead_count(const Partition& p, int t);

/// With bead_count unset, pads with zero parts to padded_bead_count.
/// Throws std::domain_error if bead_count is below the number of parts.
Abacus abacus_from_partition(const Partition& p, int t,
                             std::optional<int> bead_count = std::nullopt);

/// lambda_i = B_i + i - s with trailing zeros dropped.
Partition partition_from_abacus(const Abacus& abacus);

/// Moves `bead` up one row, removing one rim t-hook from the decoded
/// partition. Throws PreconditionError if the bead is absent, already in
/// row 1, or the target position is taken.
Abacus slide_bead(const Abacus& abacus, Bead bead);

/// Slides every bead as far up its runner as it will go.
Abacus compact_abacus(const Abacus& abacus);

Partition t_core(const Partition& p, int t);

/// Bead counts (a_0, a_1, ..., a_{t-1}) of a t-core abacus, normalised so
/// that a_0 = 0.
struct CanonicalCoreAbacus {
  std::vector<int> column_counts;

  int runners() const noexcept { return static_cast<int>(column_counts.size()); }
  friend bool operator==(const CanonicalCoreAbacus&, const CanonicalCoreAbacus&) = default;
};

/// Gapless abacus with the given runner counts.
Abacus core_abacus(const std::vector<int>& column_counts);

/// Applies the shift (a_0, ..., a_{t-1}) -> (a_1, ..., a_{t-1}, a_0 - 1)
/// until runner 0 is empty. Throws std::domain_error on a gapped abacus.
CanonicalCoreAbacus canonicalize_core_abacus(const Abacus& abacus);

/// The inverse shift: (a_0, ..., a_{t-1}) -> (a_{t-1} + 1, a_0, ..., a_{t-2}).
std::vector<int> shift_forward(const std::vector<int>& column_counts);
/// Requires a_0 >= 1.
std::vector<int> shift_backward(const std::vector<int>& column_counts);

Partition partition_from_canonical(const CanonicalCoreAbacus& canonical);

/// Size of the t-core encoded by the runner counts, without decoding:
/// sum_c [t a_c (a_c - 1)/2 + c a_c] - s(s-1)/2 with s = sum_c a_c.
long long core_size(const std::vector<int>& column_counts);

/// Image of a partition under the core/quotient bijection.
struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;
  int t = 2;

  int quotient_size() const noexcept;
  /// |core| + t * sum |quotient_c|.
  int total_size() const noexcept { return core.size() + t * quotient_size(); }

  friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

/// Runner c of the padded abacus (bead count a multiple of t) gives
/// quotient component c.
CoreQuotient decompose(const Partition& p, int t);

/// Decomposes an arbitrary abacus; component labels depend on the bead
/// count mod t.
CoreQuotient decompose(const Abacus& abacus);

/// Inverse of decompose. Throws std::domain_error if the core has a
/// t-hook, std::invalid_argument if the quotient does not have t parts.
Partition compose(const CoreQuotient& cq);

}  // namespace thooks
