#include "partitions/partition.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace partitions {

std::uint64_t Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

bool Partition::is_valid() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
  }
  return true;
}

std::uint64_t PartitionStats::multiplicity(std::uint64_t value) const {
  auto it = occurrences_of.find(value);
  return it == occurrences_of.end() ? 0 : it->second;
}

PartitionStats stats_of(const Partition& p) {
  PartitionStats s;
  for (std::uint64_t part : p.parts) ++s.occurrences_of[part];
  s.distinct_count = s.occurrences_of.size();
  return s;
}

std::string to_string(const Partition& p) {
  if (p.parts.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0) out << '+';
    out << p.parts[i];
  }
  return out.str();
}

Partition parse_partition(const std::string& literal) {
  if (literal == "0") return Partition{};
  if (literal.empty()) {
    throw std::invalid_argument("empty partition literal (use \"0\" for the "
                                "empty partition)");
  }
  Partition p;
  const char* pos = literal.data();
  const char* end = literal.data() + literal.size();
  while (pos < end) {
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(pos, end, value);
    if (ec != std::errc{} || next == pos || value == 0) {
      throw std::invalid_argument("malformed partition literal: '" + literal +
                                  "' (expected '+'-separated positive integers)");
    }
    p.parts.push_back(value);
    pos = next;
    if (pos < end) {
      if (*pos != '+') {
        throw std::invalid_argument("malformed partition literal: '" + literal +
                                    "' (expected '+' separator)");
      }
      ++pos;
      if (pos == end) {
        throw std::invalid_argument("malformed partition literal: '" + literal +
                                    "' (trailing '+')");
      }
    }
  }
  if (!p.is_valid()) {
    throw std::invalid_argument("partition literal '" + literal +
                                "' is not non-increasing");
  }
  return p;
}

EnumerationCapError::EnumerationCapError(std::uint64_t n, std::uint64_t cap)
    : std::runtime_error("refusing to enumerate partitions of " +
                         std::to_string(n) + ": exceeds enumeration cap " +
                         std::to_string(cap) +
                         " (raise the cap explicitly to proceed)") {}

void check_enumeration_cap(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) throw EnumerationCapError(n, cap);
}

PartitionEnumerator::PartitionEnumerator(std::uint64_t n) {
  if (n > 0) current_.push_back(n);
}

bool PartitionEnumerator::next(Partition& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out.parts = current_;
    if (current_.empty() || current_.front() == 1) done_ = true;
    return true;
  }
  // Successor in reverse-lex order: drop trailing 1s, decrement the last
  // part > 1, then refill greedily with copies of the decremented value.
  std::uint64_t remainder = 0;
  while (!current_.empty() && current_.back() == 1) {
    remainder += 1;
    current_.pop_back();
  }
  std::uint64_t unit = --current_.back();
  remainder += 1;
  while (remainder >= unit) {
    current_.push_back(unit);
    remainder -= unit;
  }
  if (remainder > 0) current_.push_back(remainder);
  out.parts = current_;
  if (current_.front() == 1) done_ = true;
  return true;
}

std::vector<Partition> enumerate_partitions(std::uint64_t n,
                                            std::uint64_t cap) {
  check_enumeration_cap(n, cap);
  std::vector<Partition> all;
  PartitionEnumerator gen(n);
  Partition p;
  while (gen.next(p)) all.push_back(p);
  return all;
}

void for_each_partition(std::uint64_t n,
                        const std::function<void(const Partition&)>& visit,
                        std::uint64_t cap) {
  check_enumeration_cap(n, cap);
  PartitionEnumerator gen(n);
  Partition p;
  while (gen.next(p)) visit(p);
}

BigCount count_partitions_brute(std::uint64_t n, std::uint64_t cap) {
  BigCount total = 0;
  for_each_partition(n, [&](const Partition&) { ++total; }, cap);
  return total;
}

BigCount q_count_brute(std::uint64_t k, std::uint64_t n, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("q_count_brute: k must be >= 1");
  BigCount total = 0;
  for_each_partition(
      n,
      [&](const Partition& p) {
        for (std::uint64_t part : p.parts)
          if (part == k) ++total;
      },
      cap);
  return total;
}

BigCount v_count_brute(std::uint64_t k, std::uint64_t n, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("v_count_brute: k must be >= 1");
  BigCount total = 0;
  for_each_partition(
      n,
      [&](const Partition& p) {
        for (const auto& [value, mult] : stats_of(p).occurrences_of)
          if (mult >= k) ++total;
      },
      cap);
  return total;
}

BigCount s_sum_brute(std::uint64_t n, std::uint64_t cap) {
  BigCount total = 0;
  for_each_partition(
      n, [&](const Partition& p) { total += stats_of(p).distinct_count; },
      cap);
  return total;
}

}  // namespace partitions
