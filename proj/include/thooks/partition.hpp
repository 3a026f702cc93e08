#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace thooks {

/// An integer partition: a non-increasing sequence of positive parts.
///
/// Partitions are immutable values compared structurally. The empty
/// partition is the unique partition of 0. Rows and columns of the
/// Ferrers-Young diagram are 1-based everywhere in this library.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is non-increasing and
  /// every entry is positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }

  /// Sum of the parts, |lambda|.
  int size() const noexcept { return size_; }

  /// Number of (nonzero) parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_i for 1 <= i; zero past the last part.
  int part(int i) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// "5,3,2,1"; the empty partition renders as "".
std::string to_string(const Partition& p);

/// Parses a comma-separated part list. Empty input (or "0") is the empty
/// partition. Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

/// Multiset of hook lengths, kept sorted in non-increasing order.
class HookMultiset {
 public:
  HookMultiset() = default;
  explicit HookMultiset(std::vector<int> entries);

  std::span<const int> entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int count(int h) const;
  /// Largest hook length, or 0 for the empty multiset.
  int max() const noexcept { return entries_.empty() ? 0 : entries_.front(); }

  friend bool operator==(const HookMultiset&, const HookMultiset&) = default;

 private:
  std::vector<int> entries_;
};

/// Every partition of n exactly once, in reverse-lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
std::vector<Partition> enumerate_partitions(int n);

/// Visitor form of enumerate_partitions; same order, no allocation per
/// partition beyond the visitor's own. Parts are passed as a span that is
/// only valid for the duration of the call.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit);

Partition conjugate(const Partition& p);

/// h(i,j) = (lambda_i - j) + (lambda'_j - i) + 1. Throws std::domain_error
/// if (i,j) is outside the diagram.
int hook_length(const Partition& p, int i, int j);

/// Hook lengths laid out like the diagram: row i holds h(i,1..lambda_i).
std::vector<std::vector<int>> hook_table(const Partition& p);

HookMultiset hook_multiset(const Partition& p);

/// Number of cells whose hook length is divisible by t. Throws
/// std::domain_error for t < 2.
int count_t_hooks(const Partition& p, int t);
int count_t_hooks(std::span<const int> parts, int t);

/// n! / prod h(i,j), the degree of the irreducible S_n representation
/// indexed by p. Exact; throws std::logic_error if the quotient is not
/// integral.
mpz_class representation_dimension(const Partition& p);

}  // namespace thooks
