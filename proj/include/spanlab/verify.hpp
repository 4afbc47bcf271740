#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spanlab/checked.hpp"

namespace spanlab {

// Inclusive ranges. Fields a suite does not use are ignored.
struct SweepConfig {
  std::pair<int, int> n_range{1, 6};
  Int max_entry = 12;
  std::pair<int, int> m_range{2, 5};
  int random_trials = 0;
  std::uint64_t seed = 20240601;
  int m_cap = 0;  // 0: suite default (4 * a_n for the stabilization suite)
  std::optional<std::string> report_path;
  bool dedupe_symmetry = false;  // keep only the lexicographically smaller of A and its reversal
  bool falsify = false;          // corrupt every expected value; the suite must then fail
};

// The configuration each suite runs with when none is given.
SweepConfig default_config(std::string_view suite);

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::int64_t checked = 0;
  std::int64_t failure_count = 0;
  std::vector<Failure> failures;  // first few only, see failure_count
  std::vector<std::string> notes;
  double seconds = 0;
  bool passed() const { return failure_count == 0; }
};

// JSON with keys suite, checked, failure_count, failures, notes and (optionally) seconds.
std::string to_json(const SuiteReport& report, bool with_time = true);

const std::vector<std::string>& suite_ids();

// Throws UnknownSuite. Writes the JSON report to cfg.report_path when set.
SuiteReport run_suite(std::string_view id, const SweepConfig& cfg);
SuiteReport run_suite(std::string_view id);

// Each suite with its own default config; `override` replaces all of them when given.
std::vector<SuiteReport> run_all(const std::optional<SweepConfig>& override = std::nullopt);

// Throws SuiteFailed naming the first counterexample.
void ensure_passed(const SuiteReport& report);

}  // namespace spanlab
