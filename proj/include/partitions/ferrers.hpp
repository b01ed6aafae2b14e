#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "partitions/bigcount.hpp"
#include "partitions/partition.hpp"

namespace partitions {

// Cell coordinates are 0-based (row, column); row i has rows.parts[i] cells.
using Cell = std::pair<std::uint64_t, std::uint64_t>;

// Row-length view of a partition, with optional cells flagged as newly
// added by a packet addition. Removing marked cells must leave a valid
// Ferrers diagram (the source diagram).
struct FerrersDiagram {
  Partition rows;
  std::set<Cell> marks;
};

// One line per row, top to bottom: '*' for unmarked cells, '#' for marked
// ones, no trailing whitespace. Empty diagram renders as the empty string.
std::string render(const FerrersDiagram& d);

enum class PacketPlacement { SeparateUnit, Merge };

struct PacketResult {
  Partition partition;
  FerrersDiagram diagram;
  PacketPlacement kind;
  std::uint64_t merge_value = 0;  // meaningful only for Merge
};

// All partitions of n+k obtainable from `source` (a partition of n) by
// adding one vertical packet of k cells.
struct PacketAdditionOutcome {
  Partition source;
  std::uint64_t k = 0;
  std::vector<PacketResult> results;
};

// Distinct part values of p with multiplicity >= k, largest first. Each
// admits exactly one merge: even with more than k equal parts only one
// packet fits.
std::vector<std::uint64_t> merge_sites(const Partition& p, std::uint64_t k);

// Adds a vertical k-packet to p every valid way: once as k separate parts
// of size 1, and once per merge site v by raising the top k rows of the
// v-block to v+1. Results carry '#' marks on the added cells.
PacketAdditionOutcome add_packet(const Partition& p, std::uint64_t k);

// Total generation events over all partitions of n: each source contributes
// 1 + |merge_sites|. Duplicates across sources count separately. Equals
// Q_k(n+k) and P(n) + V_k(n).
BigCount count_new_partitions(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace partitions
