#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "partitions/bigcount.hpp"

namespace partitions {

// Memoized table of partition numbers P(0..high_water), grown on demand via
// Euler's pentagonal-number recurrence. Extension is serialized internally,
// so a single table can be shared across threads.
class CountTable {
 public:
  CountTable();

  // P(n); 0 for n < 0 so that expansions like P(n-k)+P(n-2k)+... terminate.
  BigCount partition_number(std::int64_t n);

  // Q_k(n) = sum_{i>=1} P(n - i*k); 0 when n < k. Requires k >= 1.
  BigCount q_count(std::uint64_t k, std::int64_t n);

  // V_k(n) = Q_k(n) (Elder's theorem carries the correctness argument; the
  // brute-force oracle carries the test).
  BigCount v_count(std::uint64_t k, std::int64_t n);

  // S(n) = sum_{i=0}^{n-1} P(i); 0 for n = 0.
  BigCount s_sum(std::uint64_t n);

  std::int64_t high_water() const;

 private:
  void extend_to(std::int64_t n);

  mutable std::mutex mutex_;
  std::vector<BigCount> p_values_;
};

// Shared table behind the free functions below.
CountTable& shared_count_table();

BigCount partition_number(std::int64_t n);
BigCount q_count(std::uint64_t k, std::int64_t n);
BigCount v_count(std::uint64_t k, std::int64_t n);
BigCount s_sum(std::uint64_t n);

}  // namespace partitions
