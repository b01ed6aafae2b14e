#include "partitions/ferrers.hpp"

#include <stdexcept>

namespace partitions {

std::string render(const FerrersDiagram& d) {
  std::string out;
  for (std::uint64_t row = 0; row < d.rows.parts.size(); ++row) {
    if (row > 0) out += '\n';
    for (std::uint64_t col = 0; col < d.rows.parts[row]; ++col) {
      out += d.marks.contains({row, col}) ? '#' : '*';
    }
  }
  return out;
}

std::vector<std::uint64_t> merge_sites(const Partition& p, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("merge_sites: k must be >= 1");
  std::vector<std::uint64_t> sites;
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    ++run;
    const bool block_ends =
        i + 1 == p.parts.size() || p.parts[i + 1] != p.parts[i];
    if (block_ends) {
      if (run >= k) sites.push_back(p.parts[i]);
      run = 0;
    }
  }
  return sites;  // parts are non-increasing, so sites come out largest first
}

PacketAdditionOutcome add_packet(const Partition& p, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("add_packet: k must be >= 1");
  PacketAdditionOutcome outcome{p, k, {}};

  // The packet as a separate unit: k new rows of size 1.
  {
    PacketResult unit;
    unit.kind = PacketPlacement::SeparateUnit;
    unit.partition = p;
    for (std::uint64_t i = 0; i < k; ++i) {
      unit.partition.parts.push_back(1);
      unit.diagram.marks.insert({p.parts.size() + i, 0});
    }
    unit.diagram.rows = unit.partition;
    outcome.results.push_back(std::move(unit));
  }

  // One merge per site: raise the top k rows of the v-block to v+1. Rows
  // above hold values > v, so the result stays non-increasing.
  for (std::uint64_t v : merge_sites(p, k)) {
    PacketResult merged;
    merged.kind = PacketPlacement::Merge;
    merged.merge_value = v;
    merged.partition = p;
    std::uint64_t raised = 0;
    for (std::size_t row = 0; row < merged.partition.parts.size() && raised < k;
         ++row) {
      if (merged.partition.parts[row] == v) {
        merged.partition.parts[row] = v + 1;
        merged.diagram.marks.insert({row, v});
        ++raised;
      }
    }
    merged.diagram.rows = merged.partition;
    outcome.results.push_back(std::move(merged));
  }
  return outcome;
}

BigCount count_new_partitions(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("count_new_partitions: k must be >= 1");
  BigCount total = 0;
  for_each_partition(
      n, [&](const Partition& p) { total += 1 + merge_sites(p, k).size(); },
      cap);
  return total;
}

}  // namespace partitions
