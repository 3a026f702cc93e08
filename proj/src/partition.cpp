#include "thooks/partition.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace thooks {

namespace {

std::vector<int> conjugate_parts(std::span<const int> parts) {
  if (parts.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts.front()), 0);
  for (int row : parts) {
    for (int j = 0; j < row; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return conj;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::part(int i) const noexcept {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(' << to_string(p) << ')';
  return os;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (int part : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "0" || text == "()" || text == "empty" || text == "\u2205") return {};
  if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);

  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition: '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

HookMultiset::HookMultiset(std::vector<int> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

int HookMultiset::count(int h) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), h));
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw std::domain_error("enumerate_partitions: n must be non-negative");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  partitions_rec(n, n, prefix, visit);
}

Partition conjugate(const Partition& p) { return Partition(conjugate_parts(p.parts())); }

int hook_length(const Partition& p, int i, int j) {
  if (i < 1 || j < 1 || j > p.part(i))
    throw std::domain_error("hook_length: cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is outside the diagram");
  int leg = 0;
  for (int row = i + 1; row <= p.length() && p.part(row) >= j; ++row) ++leg;
  return (p.part(i) - j) + leg + 1;
}

std::vector<std::vector<int>> hook_table(const Partition& p) {
  const auto conj = conjugate_parts(p.parts());
  std::vector<std::vector<int>> table;
  table.reserve(static_cast<std::size_t>(p.length()));
  for (int i = 1; i <= p.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= p.part(i); ++j)
      row.push_back((p.part(i) - j) + (conj[static_cast<std::size_t>(j - 1)] - i) + 1);
    table.push_back(std::move(row));
  }
  return table;
}

HookMultiset hook_multiset(const Partition& p) {
  std::vector<int> all;
  all.reserve(static_cast<std::size_t>(p.size()));
  for (const auto& row : hook_table(p)) all.insert(all.end(), row.begin(), row.end());
  return HookMultiset(std::move(all));
}

int count_t_hooks(std::span<const int> parts, int t) {
  if (t < 2) throw std::domain_error("count_t_hooks: t must be at least 2");
  const auto conj = conjugate_parts(parts);
  int count = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int row = parts[i];
    for (int j = 0; j < row; ++j) {
      const int h = (row - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      if (h % t == 0) ++count;
    }
  }
  return count;
}

int count_t_hooks(const Partition& p, int t) { return count_t_hooks(p.parts(), t); }

mpz_class representation_dimension(const Partition& p) {
  mpz_class numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(p.size()));
  mpz_class denominator = 1;
  const auto hooks = hook_multiset(p);
  for (int h : hooks.entries()) denominator *= h;
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw std::logic_error("representation_dimension: hook product does not divide n!");
  mpz_class dim;
  mpz_divexact(dim.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return dim;
}

}  // namespace thooks
