#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "partitions/counting.hpp"
#include "partitions/ferrers.hpp"
#include "partitions/partition.hpp"

using namespace partitions;

namespace {

Partition P(std::vector<std::uint64_t> parts) {
  return Partition{std::move(parts)};
}

// Strips marked cells off a result diagram and returns the remaining rows
// as a partition (empty rows vanish).
Partition remove_marked_cells(const FerrersDiagram& d) {
  Partition out;
  for (std::uint64_t row = 0; row < d.rows.parts.size(); ++row) {
    std::uint64_t cells = 0;
    for (std::uint64_t col = 0; col < d.rows.parts[row]; ++col) {
      if (!d.marks.contains({row, col})) ++cells;
    }
    if (cells > 0) out.parts.push_back(cells);
  }
  return out;
}

}  // namespace

TEST_CASE("render") {
  CHECK(render({P({3, 2}), {}}) == "***\n**");
  CHECK(render({P({2, 2, 1}), {{0, 2}, {1, 2}}}) == "**\n**\n*");  // marks outside rows are inert
  CHECK(render({P({3, 3, 1}), {{0, 2}, {1, 2}}}) == "**#\n**#\n*");
  CHECK(render({P({}), {}}) == "");
  CHECK(render({P({1}), {{0, 0}}}) == "#");
}

TEST_CASE("merge_sites") {
  CHECK(merge_sites(P({2, 2, 1}), 2) == std::vector<std::uint64_t>{2});
  CHECK(merge_sites(P({1, 1, 1, 1, 1}), 2) == std::vector<std::uint64_t>{1});
  CHECK(merge_sites(P({5}), 2).empty());
  CHECK(merge_sites(P({4, 1}), 1) == std::vector<std::uint64_t>{4, 1});
  CHECK(merge_sites(P({}), 3).empty());
  CHECK_THROWS_AS(merge_sites(P({2, 1}), 0), std::invalid_argument);
}

TEST_CASE("add_packet on 2+2+1 with k=2 reproduces the two valid diagrams") {
  const PacketAdditionOutcome outcome = add_packet(P({2, 2, 1}), 2);
  REQUIRE(outcome.results.size() == 2);

  const PacketResult& unit = outcome.results[0];
  CHECK(unit.kind == PacketPlacement::SeparateUnit);
  CHECK(unit.partition == P({2, 2, 1, 1, 1}));
  CHECK(render(unit.diagram) == "**\n**\n*\n#\n#");

  const PacketResult& merged = outcome.results[1];
  CHECK(merged.kind == PacketPlacement::Merge);
  CHECK(merged.merge_value == 2);
  CHECK(merged.partition == P({3, 3, 1}));
  CHECK(render(merged.diagram) == "**#\n**#\n*");
}

TEST_CASE("add_packet on 4+1 with k=1") {
  const PacketAdditionOutcome outcome = add_packet(P({4, 1}), 1);
  std::vector<Partition> results;
  for (const auto& r : outcome.results) results.push_back(r.partition);
  CHECK(results ==
        std::vector<Partition>{P({4, 1, 1}), P({5, 1}), P({4, 2})});
  CHECK(render(outcome.results[1].diagram) == "****#\n*");
  CHECK(render(outcome.results[2].diagram) == "****\n*#");
}

TEST_CASE("add_packet to the empty partition") {
  const PacketAdditionOutcome outcome = add_packet(P({}), 3);
  REQUIRE(outcome.results.size() == 1);
  CHECK(outcome.results[0].partition == P({1, 1, 1}));
  CHECK(render(outcome.results[0].diagram) == "#\n#\n#");
}

TEST_CASE("count_new_partitions") {
  CHECK(count_new_partitions(5, 1) == 19);
  CHECK(count_new_partitions(5, 1) == q_count(1, 6));
  CHECK(count_new_partitions(0, 3) == 1);
}

TEST_CASE("packet addition structural properties") {
  for (std::uint64_t n = 0; n <= 15; ++n) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
      for (const Partition& source : enumerate_partitions(n)) {
        const PacketAdditionOutcome outcome = add_packet(source, k);
        CHECK(outcome.results.size() ==
              1 + merge_sites(source, k).size());

        std::set<std::vector<std::uint64_t>> seen;
        for (const PacketResult& result : outcome.results) {
          CHECK(result.partition.is_valid());
          CHECK(result.partition.n() == n + k);
          CHECK(seen.insert(result.partition.parts).second);  // distinct

          // Marks record exactly the k added cells; removing them gives
          // back the source.
          CHECK(result.diagram.marks.size() == k);
          CHECK(remove_marked_cells(result.diagram) == source);

          if (result.kind == PacketPlacement::SeparateUnit) {
            CHECK(result.partition.parts.size() == source.parts.size() + k);
          } else {
            CHECK(result.partition.parts.size() == source.parts.size());
          }
        }
      }
    }
  }
}

TEST_CASE("generation count equals Q_k(n+k) and P(n)+V_k(n)") {
  for (std::uint64_t n = 0; n <= 18; ++n) {
    for (std::uint64_t k = 1; k <= 6; ++k) {
      const BigCount count = count_new_partitions(n, k);
      CHECK(count == q_count(k, static_cast<std::int64_t>(n + k)));
      CHECK(count == partition_number(static_cast<std::int64_t>(n)) +
                         v_count(k, static_cast<std::int64_t>(n)));
    }
  }
}

TEST_CASE("count_new_partitions respects the enumeration cap") {
  CHECK_THROWS_AS(count_new_partitions(61, 1), EnumerationCapError);
  CHECK_THROWS_AS(count_new_partitions(10, 1, 9), EnumerationCapError);
}
