#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "partitions/bigcount.hpp"
#include "partitions/partition.hpp"

namespace partitions {

enum class Statistic { P, Q };

// Asserts statistic_C(A*n + B) == 0 (mod m) for all n >= 0. C is the part
// index and only meaningful when statistic is Q.
struct CongruenceClaim {
  Statistic statistic = Statistic::Q;
  std::uint64_t part_index = 0;  // C
  std::uint64_t step = 1;        // A
  std::uint64_t offset = 0;      // B
  std::uint64_t modulus = 2;     // m
  // "paper-asserted" for claims stated in the source material,
  // "derived-repair" for the C=A variants shipped alongside.
  std::string provenance = "paper-asserted";
  bool expected_to_pass = true;

  std::string name() const;  // e.g. "Q_5(5n+4) = 0 (mod 5)"
  void validate() const;     // throws std::invalid_argument on bad fields
};

struct Counterexample {
  std::uint64_t n = 0;
  BigCount value;
  BigCount residue;  // nonzero residue, or lhs-rhs for identity checks
};

// Outcome of one range-bounded check. Never a proof: `passed` means no
// counterexample in [range_lo, range_hi].
struct VerificationReport {
  std::string identity;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  bool passed = true;
  std::vector<Counterexample> counterexamples;  // capped
  std::uint64_t counterexamples_total = 0;      // uncapped count
};

inline constexpr std::size_t kDefaultCounterexampleCap = 10;

// JSON shape: {claim, range:[lo,hi], passed,
//              counterexamples:[{n, value, residue}]}
// Values are decimal strings (they exceed 64 bits routinely).
nlohmann::json to_json(const VerificationReport& report);

struct VerifyOptions {
  // Cross-check against enumeration oracles where the range allows it.
  bool oracle = true;
  std::uint64_t oracle_n_limit = 40;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t counterexample_cap = kDefaultCounterexampleCap;
};

// Stanley: S(n) = Q_1(n) for 0 <= n <= n_max.
VerificationReport verify_stanley(std::uint64_t n_max,
                                  const VerifyOptions& opts = {});

// Elder: V_k(n) = Q_k(n), checked against the brute oracle over the grid
// n <= n_max, 1 <= k <= k_max.
VerificationReport verify_elder(std::uint64_t n_max, std::uint64_t k_max,
                                const VerifyOptions& opts = {});

// S(n) = sum_{i=0}^{k-1} Q_k(n+i) for 1 <= n <= n_max, 1 <= k <= k_max.
VerificationReport verify_theorem1(std::uint64_t n_max, std::uint64_t k_max,
                                   const VerifyOptions& opts = {});

// V_k(n) = sum_{j=0}^{r-1} Q_{rk}(n + j*k) over the (n, k, r) grid.
VerificationReport verify_theorem2(std::uint64_t n_max, std::uint64_t k_max,
                                   std::uint64_t r_max,
                                   const VerifyOptions& opts = {});

// Evaluates the claim at A*n+B for 0 <= n <= n_max and records every n with
// a nonzero residue mod m.
VerificationReport verify_congruence(const CongruenceClaim& claim,
                                     std::uint64_t n_max,
                                     const VerifyOptions& opts = {});

// The concrete congruences this tool ships with: the three Ramanujan
// analogues, the two asserted higher-power claims (which fail empirically;
// expected_to_pass records that), and their C=A repairs.
std::vector<CongruenceClaim> builtin_claims();

// For each C in 1..C_max, checks (Q, C, A, B, m) up to n_max and returns
// only the surviving C values with their reports.
std::vector<std::pair<std::uint64_t, VerificationReport>> scan_for_C(
    std::uint64_t A, std::uint64_t B, std::uint64_t m, std::uint64_t C_max,
    std::uint64_t n_max, const VerifyOptions& opts = {});

}  // namespace partitions
