#include "doctest.h"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spanlab/error.hpp"
#include "spanlab/parallel.hpp"
#include "spanlab/verify.hpp"

using namespace spanlab;

namespace {

// Suites cheap enough to run at their defaults in a unit test.
const std::vector<std::string> kQuick{"prop33", "cor43", "prop41", "prop49_410", "prop51", "rem53", "thm14_15", "prop37"};

SweepConfig small_propagation() {
  SweepConfig cfg = default_config("prop46_47");
  cfg.n_range = {3, 4};
  cfg.random_trials = 1;
  return cfg;
}

}  // namespace

TEST_CASE("suite ids and unknown suites") {
  CHECK(suite_ids().size() == 10);
  for (const auto& id : suite_ids()) CHECK_NOTHROW(default_config(id));
  try {
    run_suite("prop99");
    FAIL("expected UnknownSuite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }
  CHECK_THROWS_AS(default_config(""), Error);
}

TEST_CASE("default suites pass") {
  for (const auto& id : kQuick) {
    CAPTURE(id);
    const SuiteReport r = run_suite(id);
    CHECK(r.suite == id);
    CHECK(r.checked > 0);
    CHECK(r.failure_count == 0);
    CHECK(r.failures.empty());
    CHECK_NOTHROW(ensure_passed(r));
  }
  const SuiteReport p = run_suite("prop46_47", small_propagation());
  CHECK(p.checked > 0);
  CHECK(p.passed());
}

TEST_CASE("exhaustive span suite covers the whole family") {
  const SuiteReport r = run_suite("prop33");
  // 2430 normalized sequences with n <= 6, a_n <= 12; n = 1, 2 carry 4 checks per m, the rest 5.
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0] == "sequences: 2430");
  CHECK(r.checked > 40000);
}

TEST_CASE("larger entries still pass") {
  SweepConfig cfg = default_config("prop33");
  cfg.max_entry = 20;
  const SuiteReport big = run_suite("prop33", cfg);
  CHECK(big.passed());
  CHECK(big.checked > run_suite("prop33").checked);
}

TEST_CASE("cuspidal cubic witness is recorded") {
  const SuiteReport r = run_suite("rem53");
  CHECK(r.passed());
  REQUIRE(!r.notes.empty());
  CHECK(r.notes.back() == "witness: 2,0,1 / 0,3,0");
}

TEST_CASE("perturbed systems: per-weight bound holds, dim S_m <= span does not") {
  SweepConfig cfg = default_config("prop44_45");
  cfg.random_trials = 5;
  const SuiteReport r = run_suite("prop44_45", cfg);
  CHECK(r.failure_count > 0);
  for (const Failure& f : r.failures) {
    CAPTURE(f.input);
    CHECK(f.input.ends_with("dim S_m <= span"));
    // The violations all go the other way: dim S_m exceeds the span.
    CHECK(std::stoll(f.got) > std::stoll(f.expected.substr(3)));
  }
  CHECK_THROWS_AS(ensure_passed(r), Error);
  // (0,1,2) with s_2 = t^2 + c t^3 + ...: six independent quadratic products against span 5.
  CHECK(r.failures.front().input.starts_with("A=(0,1,2) m=2"));
}

TEST_CASE("falsified oracles make every suite fail") {
  for (const auto& id : kQuick) {
    CAPTURE(id);
    SweepConfig cfg = default_config(id);
    cfg.falsify = true;
    if (id == "cor43") cfg.random_trials = 50;
    const SuiteReport r = run_suite(id, cfg);
    CHECK_FALSE(r.passed());
    try {
      ensure_passed(r);
      FAIL("expected SuiteFailed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SuiteFailed);
    }
  }
}

TEST_CASE("reports are deterministic and thread-count independent") {
  SweepConfig cfg = default_config("prop44_45");
  cfg.random_trials = 3;
  const std::string a = to_json(run_suite("prop44_45", cfg), false);
  const std::string b = to_json(run_suite("prop44_45", cfg), false);
  CHECK(a == b);

  setenv("SPANLAB_THREADS", "1", 1);
  const std::string serial = to_json(run_suite("prop44_45", cfg), false);
  unsetenv("SPANLAB_THREADS");
  CHECK(serial == a);

  cfg.seed += 1;
  CHECK(to_json(run_suite("prop44_45", cfg), false) != a);

  SweepConfig c43 = default_config("cor43");
  c43.random_trials = 500;
  CHECK(to_json(run_suite("cor43", c43), false) == to_json(run_suite("cor43", c43), false));
}

TEST_CASE("report file and schema") {
  SweepConfig cfg = default_config("prop37");
  const std::string path = "test_verify_report.json";
  cfg.report_path = path;
  const SuiteReport r = run_suite("prop37", cfg);
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto j = nlohmann::json::parse(buf.str());
  CHECK(j.at("suite") == "prop37");
  CHECK(j.at("checked") == r.checked);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("seconds").is_number());
  std::remove(path.c_str());

  const auto no_time = nlohmann::json::parse(to_json(r, false));
  CHECK_FALSE(no_time.contains("seconds"));
}

TEST_CASE("symmetry deduplication shrinks the sweep without changing the verdict") {
  SweepConfig cfg = default_config("prop33");
  cfg.dedupe_symmetry = true;
  const SuiteReport d = run_suite("prop33", cfg);
  const SuiteReport full = run_suite("prop33");
  CHECK(d.passed());
  CHECK(d.checked < full.checked);
  CHECK(2 * d.checked > full.checked);  // palindromic sequences survive
}

TEST_CASE("empty ranges are rejected") {
  SweepConfig cfg = default_config("prop33");
  cfg.m_range = {5, 2};
  CHECK_THROWS_AS(run_suite("prop33", cfg), Error);
}

TEST_CASE("parallel_for visits each index once and rethrows") {
  std::vector<std::atomic<int>> hits(257);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw Error(ErrorCode::AssertionFailed, "boom");
                  }),
                  Error);
  setenv("SPANLAB_THREADS", "1", 1);
  CHECK(thread_budget() == 1);
  unsetenv("SPANLAB_THREADS");
}
