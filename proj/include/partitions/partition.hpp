#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions/bigcount.hpp"

namespace partitions {

// A partition of n: non-increasing sequence of positive integers summing
// to n. The unique partition of 0 is the empty sequence.
struct Partition {
  std::vector<std::uint64_t> parts;

  Partition() = default;
  explicit Partition(std::vector<std::uint64_t> p) : parts(std::move(p)) {}

  std::uint64_t n() const;
  bool is_valid() const;

  bool operator==(const Partition&) const = default;
};

// Multiplicity view of a partition.
struct PartitionStats {
  std::map<std::uint64_t, std::uint64_t> occurrences_of;
  std::uint64_t distinct_count = 0;

  // Absent part values have multiplicity 0, not an error.
  std::uint64_t multiplicity(std::uint64_t value) const;
};

PartitionStats stats_of(const Partition& p);

// "a+b+c" with parts in stored order; the empty partition prints as "0".
std::string to_string(const Partition& p);

// Parses the '+' notation ("2+2+1"); "0" gives the empty partition.
// Throws std::invalid_argument on malformed input or increasing parts.
Partition parse_partition(const std::string& literal);

// Enumeration refuses n above this unless the caller raises the cap.
inline constexpr std::uint64_t kDefaultEnumerationCap = 60;

class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(std::uint64_t n, std::uint64_t cap);
};

// Lazy generator over all partitions of n in reverse-lexicographic order
// (largest-first comparison), the order of Fig. 1: [n] first, all-ones last.
// Forward iteration only.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::uint64_t n);

  // Returns false when exhausted; otherwise fills `out` with the next
  // partition in order.
  bool next(Partition& out);

 private:
  std::vector<std::uint64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

void check_enumeration_cap(std::uint64_t n, std::uint64_t cap);

// Materializes the full enumeration; throws EnumerationCapError if n > cap.
std::vector<Partition> enumerate_partitions(
    std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap);

// Streaming visit, same order and cap semantics as enumerate_partitions.
void for_each_partition(std::uint64_t n,
                        const std::function<void(const Partition&)>& visit,
                        std::uint64_t cap = kDefaultEnumerationCap);

// Brute-force oracles. These enumerate every partition of n and are the
// ground truth the fast counting module is validated against.
BigCount count_partitions_brute(std::uint64_t n,
                                std::uint64_t cap = kDefaultEnumerationCap);

// Total occurrences of the part k across all partitions of n.
BigCount q_count_brute(std::uint64_t k, std::uint64_t n,
                       std::uint64_t cap = kDefaultEnumerationCap);

// Total count, over partitions of n, of distinct values with multiplicity >= k.
BigCount v_count_brute(std::uint64_t k, std::uint64_t n,
                       std::uint64_t cap = kDefaultEnumerationCap);

// Sum over partitions of n of the number of distinct part values.
BigCount s_sum_brute(std::uint64_t n,
                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace partitions
