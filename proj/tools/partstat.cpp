// partstat: command-line front end for the partition statistics library.
//
// Subcommands: compute, enumerate, verify, scan, ferrers.
// Exit codes: 0 success / all checks passed, 1 verification counterexample,
// 2 usage or domain error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "partitions/counting.hpp"
#include "partitions/ferrers.hpp"
#include "partitions/partition.hpp"
#include "partitions/theorems.hpp"

namespace {

using nlohmann::json;
using namespace partitions;

constexpr const char* kVersion = "0.1.0";

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  bool no_oracle = false;
  bool no_provenance = false;
};

VerifyOptions verify_options(const GlobalOptions& g) {
  VerifyOptions opts;
  opts.oracle = !g.no_oracle;
  opts.enumeration_cap = g.enum_cap;
  return opts;
}

// Inclusive range "a..b"; a bare "n" means n..n.
struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      r.lo = r.hi = std::stoull(text);
    } else {
      r.lo = std::stoull(text.substr(0, sep));
      r.hi = std::stoull(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or A..B, got '" + text + "'");
  }
  if (r.lo > r.hi) {
    throw CLI::ValidationError("range", "range lower bound exceeds upper bound");
  }
  return r;
}

void emit_envelope(const GlobalOptions& g, const std::string& command,
                   json parameters, json result) {
  json envelope{{"command", command},
                {"parameters", std::move(parameters)},
                {"result", std::move(result)}};
  if (!g.no_provenance) {
    envelope["provenance"] = {{"tool", "partstat"}, {"version", kVersion}};
  }
  std::cout << envelope.dump(2) << "\n";
}

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) std::cout << ',';
    std::cout << header[i];
  }
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) std::cout << ',';
      std::cout << row[i];
    }
    std::cout << "\n";
  }
}

json report_to_json(const VerificationReport& report) {
  return to_json(report);
}

void print_report_text(const VerificationReport& report) {
  std::cout << (report.passed ? "[PASS] " : "[FAIL] ") << report.identity
            << "  (checked n in [" << report.range_lo << ", "
            << report.range_hi << "])\n";
  for (const auto& ce : report.counterexamples) {
    std::cout << "       counterexample: n=" << ce.n << " value=" << ce.value
              << " residue=" << ce.residue << "\n";
  }
  if (report.counterexamples_total > report.counterexamples.size()) {
    std::cout << "       ("
              << report.counterexamples_total - report.counterexamples.size()
              << " more counterexamples suppressed)\n";
  }
}

// ---------------------------------------------------------------- compute

int run_compute(const GlobalOptions& g, const std::string& statistic,
                std::optional<std::uint64_t> k, const std::string& range_text) {
  const Range range = parse_range(range_text);
  const bool needs_k = statistic == "Q" || statistic == "V";
  if (needs_k && !k) {
    std::cerr << "error: statistic " << statistic << " requires --k\n";
    return 2;
  }
  if (!needs_k && k) {
    std::cerr << "error: statistic " << statistic << " does not take --k\n";
    return 2;
  }

  std::vector<std::pair<std::uint64_t, BigCount>> values;
  for (std::uint64_t n = range.lo; n <= range.hi; ++n) {
    BigCount value;
    if (statistic == "P") {
      value = partition_number(static_cast<std::int64_t>(n));
    } else if (statistic == "Q") {
      value = q_count(*k, static_cast<std::int64_t>(n));
    } else if (statistic == "V") {
      value = v_count(*k, static_cast<std::int64_t>(n));
    } else {
      value = s_sum(n);
    }
    values.emplace_back(n, std::move(value));
  }

  if (g.format == "json") {
    json rows = json::array();
    for (const auto& [n, v] : values) {
      rows.push_back({{"n", n}, {"value", v.str()}});
    }
    json params{{"statistic", statistic}, {"range", {range.lo, range.hi}}};
    if (k) params["k"] = *k;
    emit_envelope(g, "compute", std::move(params), {{"values", std::move(rows)}});
  } else if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [n, v] : values) {
      rows.push_back({std::to_string(n), v.str()});
    }
    emit_csv({"n", "value"}, rows);
  } else {
    for (const auto& [n, v] : values) {
      std::cout << statistic;
      if (k) std::cout << "_" << *k;
      std::cout << "(" << n << ") = " << v << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------- enumerate

int run_enumerate(const GlobalOptions& g, std::uint64_t n, bool with_stats) {
  std::vector<Partition> all = enumerate_partitions(n, g.enum_cap);

  if (g.format == "json") {
    json rows = json::array();
    for (const auto& p : all) {
      if (with_stats) {
        const PartitionStats stats = stats_of(p);
        json mult = json::object();
        for (const auto& [value, count] : stats.occurrences_of) {
          mult[std::to_string(value)] = count;
        }
        rows.push_back({{"partition", to_string(p)},
                        {"distinct", stats.distinct_count},
                        {"multiplicities", std::move(mult)}});
      } else {
        rows.push_back(to_string(p));
      }
    }
    emit_envelope(g, "enumerate", {{"n", n}, {"stats", with_stats}},
                  {{"count", all.size()}, {"partitions", std::move(rows)}});
  } else if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : all) {
      if (with_stats) {
        rows.push_back({to_string(p),
                        std::to_string(stats_of(p).distinct_count)});
      } else {
        rows.push_back({to_string(p)});
      }
    }
    emit_csv(with_stats ? std::vector<std::string>{"partition", "distinct"}
                        : std::vector<std::string>{"partition"},
             rows);
  } else {
    for (const auto& p : all) {
      std::cout << to_string(p);
      if (with_stats) {
        const PartitionStats stats = stats_of(p);
        std::cout << "  distinct=" << stats.distinct_count << " mult={";
        bool first = true;
        for (const auto& [value, count] : stats.occurrences_of) {
          if (!first) std::cout << ",";
          std::cout << value << ":" << count;
          first = false;
        }
        std::cout << "}";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- verify

struct ClaimFlags {
  std::string stat;
  std::uint64_t C = 0;
  std::uint64_t A = 0;
  std::uint64_t B = 0;
  std::uint64_t m = 0;
};

int run_verify(const GlobalOptions& g, const std::string& target,
               std::uint64_t n_max, std::uint64_t k_max, std::uint64_t r_max,
               bool builtin, const ClaimFlags& cf) {
  const VerifyOptions opts = verify_options(g);

  // (report, provenance-or-empty, expected_to_pass)
  std::vector<std::tuple<VerificationReport, std::string, bool>> reports;

  if (target == "stanley") {
    reports.emplace_back(verify_stanley(n_max, opts), "", true);
  } else if (target == "elder") {
    reports.emplace_back(verify_elder(n_max, k_max, opts), "", true);
  } else if (target == "thm1") {
    reports.emplace_back(verify_theorem1(n_max, k_max, opts), "", true);
  } else if (target == "thm2") {
    reports.emplace_back(verify_theorem2(n_max, k_max, r_max, opts), "", true);
  } else if (target == "congruences") {
    if (!builtin && cf.A != 0) {
      CongruenceClaim claim;
      if (cf.stat == "P") {
        claim.statistic = Statistic::P;
      } else if (cf.stat == "Q") {
        claim.statistic = Statistic::Q;
        claim.part_index = cf.C;
      } else {
        std::cerr << "error: --stat must be P or Q\n";
        return 2;
      }
      claim.step = cf.A;
      claim.offset = cf.B;
      claim.modulus = cf.m;
      claim.provenance = "user";
      reports.emplace_back(verify_congruence(claim, n_max, opts),
                           claim.provenance, true);
    } else {
      for (const CongruenceClaim& claim : builtin_claims()) {
        reports.emplace_back(verify_congruence(claim, n_max, opts),
                             claim.provenance, claim.expected_to_pass);
      }
    }
  } else {
    std::cerr << "error: unknown verify target '" << target << "'\n";
    return 2;
  }

  bool all_passed = true;
  for (const auto& [report, provenance, expected] : reports) {
    if (!report.passed) all_passed = false;
  }

  if (g.format == "json") {
    json rows = json::array();
    for (const auto& [report, provenance, expected] : reports) {
      json r = report_to_json(report);
      if (!provenance.empty()) {
        r["provenance"] = provenance;
        r["expected_to_pass"] = expected;
      }
      rows.push_back(std::move(r));
    }
    emit_envelope(g, "verify",
                  {{"target", target},
                   {"n_max", n_max},
                   {"k_max", k_max},
                   {"r_max", r_max}},
                  {{"all_passed", all_passed}, {"reports", std::move(rows)}});
  } else if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [report, provenance, expected] : reports) {
      rows.push_back({report.identity, report.passed ? "true" : "false",
                      std::to_string(report.counterexamples_total)});
    }
    emit_csv({"claim", "passed", "counterexamples"}, rows);
  } else {
    for (const auto& [report, provenance, expected] : reports) {
      print_report_text(report);
      if (!provenance.empty()) {
        std::cout << "       source: " << provenance << "; expected to "
                  << (expected ? "pass" : "fail") << " -> "
                  << ((report.passed == expected) ? "as expected"
                                                  : "UNEXPECTED")
                  << "\n";
      }
    }
  }
  return all_passed ? 0 : 1;
}

// ------------------------------------------------------------------- scan

int run_scan(const GlobalOptions& g, std::uint64_t A, std::uint64_t B,
             std::uint64_t m, std::uint64_t c_max, std::uint64_t n_max) {
  if (A < 1 || m < 2) {
    std::cerr << "error: scan requires A >= 1 and m >= 2\n";
    return 2;
  }
  const auto survivors = scan_for_C(A, B, m, c_max, n_max, verify_options(g));

  if (g.format == "json") {
    json rows = json::array();
    for (const auto& [C, report] : survivors) {
      rows.push_back({{"C", C}, {"report", report_to_json(report)}});
    }
    emit_envelope(
        g, "scan",
        {{"A", A}, {"B", B}, {"m", m}, {"c_max", c_max}, {"n_max", n_max}},
        {{"survivors", std::move(rows)}});
  } else if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [C, report] : survivors) {
      rows.push_back({std::to_string(C), "true", std::to_string(n_max)});
    }
    emit_csv({"C", "passed", "n_max"}, rows);
  } else {
    if (survivors.empty()) {
      std::cout << "no surviving C in 1.." << c_max << "\n";
    }
    for (const auto& [C, report] : survivors) {
      std::cout << "C=" << C << ": " << report.identity
                << " holds for n in [0, " << n_max << "]\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- ferrers

json diagram_json(const Partition& p, const std::string& rendered) {
  return {{"partition", to_string(p)}, {"diagram", rendered}};
}

int run_ferrers_show(const GlobalOptions& g, std::uint64_t n) {
  std::vector<Partition> all = enumerate_partitions(n, g.enum_cap);

  if (g.format == "json") {
    json rows = json::array();
    for (const auto& p : all) {
      rows.push_back(diagram_json(p, render({p, {}})));
    }
    emit_envelope(g, "ferrers-show", {{"n", n}},
                  {{"diagrams", std::move(rows)}});
  } else {
    for (const auto& p : all) {
      if (p.parts.empty()) {
        std::cout << "0: (empty diagram)\n";
        continue;
      }
      std::cout << to_string(p) << "\n" << render({p, {}}) << "\n\n";
    }
  }
  return 0;
}

int run_ferrers_add(const GlobalOptions& g, const std::string& literal,
                    std::uint64_t k) {
  const Partition source = parse_partition(literal);
  const PacketAdditionOutcome outcome = add_packet(source, k);

  if (g.format == "json") {
    json rows = json::array();
    for (const auto& result : outcome.results) {
      json r = diagram_json(result.partition, render(result.diagram));
      r["kind"] = result.kind == PacketPlacement::SeparateUnit
                      ? "separate-unit"
                      : "merge-at-" + std::to_string(result.merge_value);
      rows.push_back(std::move(r));
    }
    emit_envelope(g, "ferrers-add", {{"partition", literal}, {"k", k}},
                  {{"results", std::move(rows)}});
  } else {
    for (const auto& result : outcome.results) {
      std::cout << to_string(result.partition) << "  ["
                << (result.kind == PacketPlacement::SeparateUnit
                        ? "separate unit"
                        : "merge at " + std::to_string(result.merge_value))
                << "]\n"
                << render(result.diagram) << "\n\n";
    }
  }
  return 0;
}

int run_ferrers_count(const GlobalOptions& g, std::uint64_t n,
                      std::uint64_t k) {
  const BigCount constructed = count_new_partitions(n, k, g.enum_cap);
  const BigCount expected = q_count(k, static_cast<std::int64_t>(n + k));

  if (g.format == "json") {
    emit_envelope(g, "ferrers-count", {{"n", n}, {"k", k}},
                  {{"new_partitions", constructed.str()},
                   {"q_count", expected.str()},
                   {"equal", constructed == expected}});
  } else if (g.format == "csv") {
    emit_csv({"n", "k", "new_partitions", "q_count"},
             {{std::to_string(n), std::to_string(k), constructed.str(),
               expected.str()}});
  } else {
    std::cout << "new partitions from adding a " << k << "-packet to all "
              << "partitions of " << n << ": " << constructed << "\n"
              << "Q_" << k << "(" << n + k << ")                 = "
              << expected << (constructed == expected ? "  (match)" : "  (MISMATCH)")
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integer-partition statistics, identity verification, "
               "and Ferrers-diagram constructions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  GlobalOptions g;
  if (const char* env_cap = std::getenv("PARTSTAT_ENUM_CAP")) {
    try {
      g.enum_cap = std::stoull(env_cap);
    } catch (const std::exception&) {
      std::cerr << "error: PARTSTAT_ENUM_CAP is not a number\n";
      return 2;
    }
  }
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--enum-cap", g.enum_cap,
                 "largest n the enumeration-backed commands accept")
      ->capture_default_str();
  app.add_flag("--no-oracle", g.no_oracle,
               "skip brute-force enumeration cross-checks");
  app.add_flag("--no-provenance", g.no_provenance,
               "omit tool/version metadata from json output");

  // compute
  std::string statistic;
  std::string range_text;
  std::uint64_t k_value = 0;
  auto* compute = app.add_subcommand("compute", "tabulate P, Q_k, V_k or S");
  compute->add_option("statistic", statistic, "one of P, Q, V, S")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "V", "S"}));
  compute->add_option("range", range_text, "n or a..b (inclusive)")->required();
  auto* k_opt = compute->add_option("--k", k_value, "part index for Q/V");

  // enumerate
  std::uint64_t enum_n = 0;
  bool with_stats = false;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "list all partitions of n in "
                                       "reverse-lexicographic order");
  enumerate->add_option("n", enum_n, "integer to partition")->required();
  enumerate->add_flag("--stats", with_stats,
                      "append distinct-count and multiplicities");

  // verify
  std::string target;
  std::uint64_t n_max = 40, k_max = 10, r_max = 5;
  bool builtin = false;
  ClaimFlags cf;
  auto* verify = app.add_subcommand("verify", "check identities and congruences");
  verify->add_option("target", target,
                     "stanley | elder | thm1 | thm2 | congruences")
      ->required();
  verify->add_option("--n-max", n_max, "upper end of the checked range")
      ->capture_default_str();
  verify->add_option("--k-max", k_max, "largest part index k")
      ->capture_default_str();
  verify->add_option("--r-max", r_max, "largest multiplier r (thm2)")
      ->capture_default_str();
  verify->add_flag("--builtin", builtin, "run the built-in congruence claims");
  verify->add_option("--stat", cf.stat, "P or Q (custom congruence)");
  verify->add_option("--C", cf.C, "part index (custom congruence)");
  verify->add_option("--A", cf.A, "step A (custom congruence)");
  verify->add_option("--B", cf.B, "offset B (custom congruence)");
  verify->add_option("--m", cf.m, "modulus m (custom congruence)");

  // scan
  std::uint64_t scan_A = 0, scan_B = 0, scan_m = 0, c_max = 1,
                scan_n_max = 100;
  auto* scan = app.add_subcommand(
      "scan", "find part indices C with Q_C(A*n+B) == 0 (mod m)");
  scan->add_option("A", scan_A, "step")->required();
  scan->add_option("B", scan_B, "offset")->required();
  scan->add_option("m", scan_m, "modulus")->required();
  scan->add_option("--c-max", c_max, "largest C tried")->capture_default_str();
  scan->add_option("--n-max", scan_n_max, "range checked per C")
      ->capture_default_str();

  // ferrers
  auto* ferrers = app.add_subcommand("ferrers", "Ferrers diagram operations");
  ferrers->require_subcommand(1);
  std::uint64_t show_n = 0;
  auto* show = ferrers->add_subcommand("show", "render all partitions of n");
  show->add_option("n", show_n, "integer to partition")->required();
  std::string add_literal;
  std::uint64_t packet_k = 1;
  auto* add = ferrers->add_subcommand(
      "add", "add a vertical k-packet to a partition");
  add->add_option("partition", add_literal, "'+'-separated, e.g. 2+2+1")
      ->required();
  add->add_option("--k", packet_k, "packet size")->capture_default_str();
  std::uint64_t count_n = 0;
  std::uint64_t count_k = 1;
  auto* count = ferrers->add_subcommand(
      "count", "count packet-addition results over all partitions of n");
  count->add_option("n", count_n, "integer to partition")->required();
  count->add_option("--k", count_k, "packet size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) {
      std::optional<std::uint64_t> k;
      if (k_opt->count() > 0) k = k_value;
      return run_compute(g, statistic, k, range_text);
    }
    if (*enumerate) return run_enumerate(g, enum_n, with_stats);
    if (*verify) return run_verify(g, target, n_max, k_max, r_max, builtin, cf);
    if (*scan) return run_scan(g, scan_A, scan_B, scan_m, c_max, scan_n_max);
    if (*show) return run_ferrers_show(g, show_n);
    if (*add) return run_ferrers_add(g, add_literal, packet_k);
    if (*count) return run_ferrers_count(g, count_n, count_k);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
