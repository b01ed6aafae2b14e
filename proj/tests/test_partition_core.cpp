#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partitions/partition.hpp"

using namespace partitions;

namespace {

Partition P(std::vector<std::uint64_t> parts) {
  return Partition{std::move(parts)};
}

// Reverse-lexicographic comparison, largest-first.
bool revlex_greater(const Partition& a, const Partition& b) {
  return a.parts > b.parts;
}

}  // namespace

TEST_CASE("enumerate 5 matches the reference order") {
  const std::vector<Partition> expected = {
      P({5}),       P({4, 1}),       P({3, 2}), P({3, 1, 1}),
      P({2, 2, 1}), P({2, 1, 1, 1}), P({1, 1, 1, 1, 1})};
  CHECK(enumerate_partitions(5) == expected);
}

TEST_CASE("enumerate small cases") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{P({})});
  CHECK(enumerate_partitions(1) == std::vector<Partition>{P({1})});
  CHECK(enumerate_partitions(2) ==
        std::vector<Partition>{P({2}), P({1, 1})});
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_partitions(61), EnumerationCapError);
  CHECK_THROWS_AS(enumerate_partitions(10, 9), EnumerationCapError);
  CHECK(enumerate_partitions(10, 10).size() == 42);
  // The refusal names the limit.
  try {
    enumerate_partitions(61);
    FAIL("expected EnumerationCapError");
  } catch (const EnumerationCapError& e) {
    CHECK(std::string(e.what()).find("60") != std::string::npos);
  }
}

TEST_CASE("lazy enumerator agrees with materialized enumeration") {
  PartitionEnumerator gen(7);
  Partition p;
  std::vector<Partition> streamed;
  while (gen.next(p)) streamed.push_back(p);
  CHECK(streamed == enumerate_partitions(7));
  CHECK_FALSE(gen.next(p));  // stays exhausted
}

TEST_CASE("count_partitions_brute") {
  CHECK(count_partitions_brute(5) == 7);
  CHECK(count_partitions_brute(0) == 1);
  CHECK(count_partitions_brute(9) == 30);
}

TEST_CASE("q_count_brute") {
  CHECK(q_count_brute(1, 5) == 12);
  CHECK(q_count_brute(5, 4) == 0);
  CHECK(q_count_brute(2, 5) == 4);
  CHECK_THROWS_AS(q_count_brute(0, 5), std::invalid_argument);
}

TEST_CASE("v_count_brute") {
  CHECK(v_count_brute(2, 5) == 4);
  CHECK(v_count_brute(1, 5) == 12);
  CHECK(v_count_brute(6, 5) == 0);
  CHECK_THROWS_AS(v_count_brute(0, 5), std::invalid_argument);
}

TEST_CASE("s_sum_brute") {
  CHECK(s_sum_brute(5) == 12);
  CHECK(s_sum_brute(1) == 1);
  CHECK(s_sum_brute(2) == 2);
  CHECK(s_sum_brute(0) == 0);
}

TEST_CASE("every enumerated partition is structurally valid and ordered") {
  for (std::uint64_t n = 0; n <= 40; ++n) {
    Partition last;
    std::uint64_t count = 0;
    for_each_partition(n, [&](const Partition& p) {
      CHECK(p.is_valid());
      CHECK(p.n() == n);
      if (count > 0) CHECK(revlex_greater(last, p));
      last = p;
      ++count;
    });
  }
}

TEST_CASE("Stanley and Elder hold on brute-force statistics (small range)") {
  for (std::uint64_t n = 0; n <= 25; ++n) {
    CHECK(q_count_brute(1, n) == s_sum_brute(n));
    for (std::uint64_t k = 1; k <= n; ++k) {
      CHECK(v_count_brute(k, n) == q_count_brute(k, n));
    }
  }
}

TEST_CASE("stats_of") {
  const PartitionStats s = stats_of(P({3, 2, 2, 1, 1, 1}));
  CHECK(s.distinct_count == 3);
  CHECK(s.multiplicity(1) == 3);
  CHECK(s.multiplicity(2) == 2);
  CHECK(s.multiplicity(3) == 1);
  CHECK(s.multiplicity(7) == 0);  // absent values are 0, not an error

  const PartitionStats empty = stats_of(P({}));
  CHECK(empty.distinct_count == 0);
  CHECK(empty.multiplicity(1) == 0);
}

TEST_CASE("partition literals") {
  CHECK(parse_partition("2+2+1") == P({2, 2, 1}));
  CHECK(parse_partition("5") == P({5}));
  CHECK(parse_partition("0") == P({}));
  CHECK(to_string(P({2, 2, 1})) == "2+2+1");
  CHECK(to_string(P({})) == "0");

  CHECK_THROWS_AS(parse_partition("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2++1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3+0"), std::invalid_argument);
}

TEST_CASE("to_string round-trips over enumerated partitions") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      CHECK(parse_partition(to_string(p)) == p);
    }
  }
}
