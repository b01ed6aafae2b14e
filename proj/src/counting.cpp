#include "partitions/counting.hpp"

#include <stdexcept>

namespace partitions {

CountTable::CountTable() { p_values_.push_back(1); }

std::int64_t CountTable::high_water() const {
  std::lock_guard lock(mutex_);
  return static_cast<std::int64_t>(p_values_.size()) - 1;
}

void CountTable::extend_to(std::int64_t n) {
  // Caller holds mutex_.
  if (n < static_cast<std::int64_t>(p_values_.size())) return;
  p_values_.reserve(static_cast<std::size_t>(n) + 1);
  for (auto i = static_cast<std::int64_t>(p_values_.size()); i <= n; ++i) {
    // P(i) = sum_{j>=1} (-1)^{j+1} [P(i - j(3j-1)/2) + P(i - j(3j+1)/2)]
    BigCount value = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = i - j * (3 * j - 1) / 2;
      const std::int64_t g2 = i - j * (3 * j + 1) / 2;
      if (g1 < 0) break;
      const bool add = (j % 2 == 1);
      if (add) {
        value += p_values_[static_cast<std::size_t>(g1)];
        if (g2 >= 0) value += p_values_[static_cast<std::size_t>(g2)];
      } else {
        value -= p_values_[static_cast<std::size_t>(g1)];
        if (g2 >= 0) value -= p_values_[static_cast<std::size_t>(g2)];
      }
    }
    p_values_.push_back(std::move(value));
  }
}

BigCount CountTable::partition_number(std::int64_t n) {
  if (n < 0) return 0;
  std::lock_guard lock(mutex_);
  extend_to(n);
  return p_values_[static_cast<std::size_t>(n)];
}

BigCount CountTable::q_count(std::uint64_t k, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("q_count: k must be >= 1");
  if (n < static_cast<std::int64_t>(k)) return 0;
  std::lock_guard lock(mutex_);
  extend_to(n - static_cast<std::int64_t>(k));
  BigCount total = 0;
  for (std::int64_t i = n - static_cast<std::int64_t>(k); i >= 0;
       i -= static_cast<std::int64_t>(k)) {
    total += p_values_[static_cast<std::size_t>(i)];
  }
  return total;
}

BigCount CountTable::v_count(std::uint64_t k, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("v_count: k must be >= 1");
  return q_count(k, n);
}

BigCount CountTable::s_sum(std::uint64_t n) {
  if (n == 0) return 0;
  std::lock_guard lock(mutex_);
  extend_to(static_cast<std::int64_t>(n) - 1);
  BigCount total = 0;
  for (std::uint64_t i = 0; i < n; ++i) total += p_values_[i];
  return total;
}

CountTable& shared_count_table() {
  static CountTable table;
  return table;
}

BigCount partition_number(std::int64_t n) {
  return shared_count_table().partition_number(n);
}

BigCount q_count(std::uint64_t k, std::int64_t n) {
  return shared_count_table().q_count(k, n);
}

BigCount v_count(std::uint64_t k, std::int64_t n) {
  return shared_count_table().v_count(k, n);
}

BigCount s_sum(std::uint64_t n) { return shared_count_table().s_sum(n); }

}  // namespace partitions
