#include "spanlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>

#include "json.hpp"
#include "spanlab/bounds.hpp"
#include "spanlab/error.hpp"
#include "spanlab/jets.hpp"
#include "spanlab/monomial_ideal.hpp"
#include "spanlab/parallel.hpp"
#include "spanlab/semigroup.hpp"
#include "spanlab/span.hpp"

namespace spanlab {

namespace {

constexpr std::size_t kKeptFailures = 25;

// One instance's worth of checks. Expected values are corrupted in falsify mode.
class Tally {
 public:
  explicit Tally(bool falsify) : falsify_(falsify) {}

  void equal(const std::string& input, Int expected, Int got) {
    if (falsify_) expected += 1;
    record(input, expected == got, std::to_string(expected), std::to_string(got));
  }
  void truth(const std::string& input, bool expected, bool got) {
    if (falsify_) expected = !expected;
    record(input, expected == got, expected ? "true" : "false", got ? "true" : "false");
  }
  void at_most(const std::string& input, Int bound, Int got) {
    record(input, got <= bound, "<= " + std::to_string(bound), std::to_string(got));
  }
  void at_least(const std::string& input, Int bound, Int got) {
    record(input, got >= bound, ">= " + std::to_string(bound), std::to_string(got));
  }

  std::int64_t checked = 0;
  std::int64_t failure_count = 0;
  std::vector<Failure> failures;

 private:
  void record(const std::string& input, bool ok, std::string expected, std::string got) {
    ++checked;
    if (ok) return;
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back({input, std::move(expected), std::move(got)});
  }
  bool falsify_;
};

void merge(SuiteReport& report, const Tally& t) {
  report.checked += t.checked;
  report.failure_count += t.failure_count;
  for (const Failure& f : t.failures) {
    if (report.failures.size() >= kKeptFailures) break;
    report.failures.push_back(f);
  }
}

// Runs one Tally per instance in parallel, merged in index order.
void sweep(SuiteReport& report, const SweepConfig& cfg, std::size_t count,
           const std::function<void(std::size_t, Tally&)>& body) {
  std::vector<Tally> tallies(count, Tally(cfg.falsify));
  parallel_for(count, [&](std::size_t i) { body(i, tallies[i]); });
  for (const Tally& t : tallies) merge(report, t);
}

std::string label(const VanishingSequence& a) { return "A=(" + a.str() + ")"; }
std::string label(const VanishingSequence& a, int m) { return label(a) + " m=" + std::to_string(m); }

Int as_int(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::Overflow, "value exceeds 64 bits: " + v.get_str());
  return v.get_si();
}

Int binom(int top, int k) { return as_int(binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(k))); }

std::vector<VanishingSequence> family(const SweepConfig& cfg) {
  auto all = normalized_family(cfg.n_range.first, cfg.n_range.second, cfg.max_entry);
  if (!cfg.dedupe_symmetry) return all;
  std::vector<VanishingSequence> kept;
  for (auto& a : all)
    if (!(normalize(reverse(a)).sequence < a)) kept.push_back(std::move(a));
  return kept;
}

// Near-AP sequences with the doubled difference at either end.
std::vector<VanishingSequence> near_ap_pair(int n) {
  const VanishingSequence high = elliptic_flex_sequence(n);
  return {high, normalize(reverse(high)).sequence};
}

std::vector<int> m_values(const SweepConfig& cfg) {
  std::vector<int> out;
  for (int m = cfg.m_range.first; m <= cfg.m_range.second; ++m) out.push_back(m);
  return out;
}

void require_ranges(const SweepConfig& cfg) {
  if (cfg.n_range.first > cfg.n_range.second || cfg.m_range.first > cfg.m_range.second)
    throw Error(ErrorCode::PreconditionViolated, "sweep ranges must be nonempty");
}

void suite_prop33(SuiteReport& r, const SweepConfig& cfg) {
  const auto fam = family(cfg);
  const auto ms = m_values(cfg);
  sweep(r, cfg, fam.size(), [&](std::size_t i, Tally& t) {
    const VanishingSequence& a = fam[i];
    const Int n = a.n();
    const SpanVerdict v = difference_verdict(a);
    for (int m : ms) {
      const Int s = span(a, m);
      const std::string in = label(a, m);
      t.at_least(in + " lower bound", m * n + 1, s);
      t.at_most(in + " monomial count", binom(m + static_cast<int>(n), static_cast<int>(n)), s);
      t.truth(in + " minimal span iff progression", v == SpanVerdict::ArithmeticProgression, s == m * n + 1);
      t.truth(in + " no span strictly inside (mn+1, m(n+1))", true, !(s > m * n + 1 && s < m * (n + 1)));
      if (n >= 3)
        t.truth(in + " span m(n+1) iff near progression",
                v == SpanVerdict::NearApHigh || v == SpanVerdict::NearApLow, s == m * (n + 1));
    }
  });
  r.notes.push_back("sequences: " + std::to_string(fam.size()));
}

void suite_cor43(SuiteReport& r, const SweepConfig& cfg) {
  const std::size_t trials = static_cast<std::size_t>(cfg.random_trials);
  if (cfg.max_entry < cfg.n_range.second)
    throw Error(ErrorCode::PreconditionViolated, "max_entry too small for the requested lengths");
  sweep(r, cfg, trials, [&](std::size_t i, Tally& t) {
    SeededRng rng(SeededRng::mix(cfg.seed, i));
    const int n = static_cast<int>(rng.uniform(cfg.n_range.first, cfg.n_range.second));
    std::vector<Int> pool(static_cast<std::size_t>(cfg.max_entry) + 1);
    std::iota(pool.begin(), pool.end(), Int{0});
    for (int k = 0; k <= n; ++k)
      std::swap(pool[k], pool[rng.uniform(k, static_cast<Int>(pool.size()) - 1)]);
    std::vector<Int> raw(pool.begin(), pool.begin() + n + 1);
    std::sort(raw.begin(), raw.end());
    const VanishingSequence a = VanishingSequence::validate(raw);
    const int m = static_cast<int>(rng.uniform(cfg.m_range.first, cfg.m_range.second));
    const Int c = rng.uniform(1, 6);
    const Int d = rng.uniform(0, 50);

    const Int s = span(a, m);
    const std::string in = label(a, m) + " c=" + std::to_string(c) + " d=" + std::to_string(d);
    t.equal(in + " translate/scale", s, span(translate(scale(a, c), d), m));
    t.equal(in + " reverse", s, span(reverse(a), m));
    t.equal(in + " normalize", s, span(normalize(a).sequence, m));
    t.at_least(in + " lower bound", static_cast<Int>(m) * n + 1, s);

    const SpanVerdict v = difference_verdict(a);
    const SpanVerdict rv = difference_verdict(reverse(a));
    const bool swapped = (v == SpanVerdict::NearApHigh && rv == SpanVerdict::NearApLow) ||
                         (v == SpanVerdict::NearApLow && rv == SpanVerdict::NearApHigh) ||
                         (v == rv && v != SpanVerdict::NearApHigh && v != SpanVerdict::NearApLow);
    t.truth(in + " verdict under reversal", true, swapped);
  });
  r.notes.push_back("random tuples: " + std::to_string(trials));
}

void suite_prop41(SuiteReport& r, const SweepConfig& cfg) {
  const auto fam = family(cfg);
  const auto ms = m_values(cfg);
  sweep(r, cfg, fam.size(), [&](std::size_t i, Tally& t) {
    const VanishingSequence& a = fam[i];
    const JetSystem model = monomial_model(a);
    for (int m : ms) {
      const Int s = span(a, m);
      const BigradedDims dims = bigraded_dims(a, m);
      const std::string in = label(a, m);
      t.equal(in + " span vs monomial count", s, dims.dim_S);
      t.equal(in + " span vs jet rank", s, sym_power_dim(model, m));
      t.at_most(in + " dim S_m", binom(m + a.n(), a.n()), s);
    }
  });
  r.notes.push_back("sequences: " + std::to_string(fam.size()));
}

void suite_prop49_410(SuiteReport& r, const SweepConfig& cfg) {
  const auto fam = family(cfg);
  std::vector<int> thresholds(fam.size(), 0);
  sweep(r, cfg, fam.size(), [&](std::size_t i, Tally& t) {
    const VanishingSequence& a = fam[i];
    const int cap = cfg.m_cap > 0 ? cfg.m_cap : static_cast<int>(4 * a.back());
    const HilbertPolynomial p = hilbert_polynomial(a);
    const auto profile = span_profile(a, cap);
    const auto m0 = stabilization_threshold(a, cap);
    t.truth(label(a) + " threshold exists below cap " + std::to_string(cap), true, m0.has_value());
    for (int m = 1; m <= cap; ++m) {
      const Int s = profile[m - 1];
      t.at_most(label(a, m) + " span within [0, m a_n]", m * a.back() + 1, s);
      if (m0 && m >= *m0) t.equal(label(a, m) + " Hilbert polynomial", p(m), s);
    }
    thresholds[i] = m0.value_or(0);
  });
  const int worst = thresholds.empty() ? 0 : *std::max_element(thresholds.begin(), thresholds.end());
  r.notes.push_back("sequences: " + std::to_string(fam.size()) + ", largest threshold: " + std::to_string(worst));
}

void suite_prop51(SuiteReport& r, const SweepConfig& cfg) {
  std::vector<VanishingSequence> bases;
  for (int n = std::max(2, cfg.n_range.first); n <= cfg.n_range.second; ++n) bases.push_back(standard_sequence(n));
  const std::size_t ap_count = bases.size();
  for (int n = std::max(3, cfg.n_range.first); n <= cfg.n_range.second; ++n)
    for (auto& a : near_ap_pair(n)) bases.push_back(a);
  const auto ms = m_values(cfg);

  sweep(r, cfg, bases.size(), [&](std::size_t i, Tally& t) {
    const VanishingSequence& a = bases[i];
    for (int m : ms) {
      if (m < 2) continue;
      t.truth(label(a, m) + " generated by quadrics", true, equivalence_report(a, m, 2).generated);
    }
    const int cap = std::max(3, cfg.m_range.second);
    t.equal(label(a) + " generation degree", 2, generation_degree(a, cap).degree.value_or(-1));
    t.at_least(label(a, 2) + " quadrics present", 1, bigraded_dims(a, 2).dim_J);

    if (i >= ap_count) return;
    // Constructive moves must reach every member of a weight class for progressions.
    for (int m = 2; m <= std::min(4, cfg.m_range.second); ++m) {
      std::map<Int, std::vector<Monomial>> classes;
      for (auto& xi : monomials_of_degree(a.size(), m)) classes[weight(xi, a)].push_back(xi);
      for (const auto& [w, members] : classes)
        for (std::size_t k = 1; k < members.size(); ++k) {
          const auto moves = constructive_trace(members[0], members[k], a);
          bool reaches = false;
          if (moves) {
            Monomial cur = members[0];
            for (const Move& mv : *moves) cur = apply_move(cur, mv, a);
            reaches = cur == members[k];
          }
          t.truth(label(a, m) + " constructive trace " + members[0].str() + " -> " + members[k].str(), true,
                  reaches);
        }
    }
  });
  r.notes.push_back("progressions: " + std::to_string(ap_count) +
                    ", near progressions: " + std::to_string(bases.size() - ap_count));
}

void suite_rem53(SuiteReport& r, const SweepConfig& cfg) {
  const VanishingSequence a = VanishingSequence::validate({0, 1, 3});
  Tally t(cfg.falsify);
  const std::string in = label(a);
  t.equal(in + " dim J_2", 0, bigraded_dims(a, 2).dim_J);
  t.at_least(in + " dim J_3", 1, bigraded_dims(a, 3).dim_J);

  const EquivalenceReport rep = equivalence_report(a, 3, 2);
  t.truth(in + " m=3 generated by quadrics", false, rep.generated);
  const Monomial x02 = parse_monomial("2,0,1"), x13 = parse_monomial("0,3,0");
  t.truth(in + " witness pair", true, rep.witness && rep.witness->first == x02 && rep.witness->second == x13);
  t.truth(in + " witness pair connected by moves", false, move_trace(x02, x13, a).equivalent);
  t.equal(in + " generation degree", 3, generation_degree(a, 8).degree.value_or(-1));
  for (int m = 4; m <= 8; ++m)
    t.truth(label(a, m) + " generated by cubics", true, equivalence_report(a, m, 3).generated);
  t.truth(in + " propagation hypothesis rejected", true,
          check_ideal_propagation(monomial_model(a), 2, 4).status == PropagationStatus::HypothesisFailed);
  merge(r, t);
  if (rep.witness) r.notes.push_back("witness: " + rep.witness->first.str() + " / " + rep.witness->second.str());
}

void suite_prop44_45(SuiteReport& r, const SweepConfig& cfg) {
  constexpr int kTail = 2;
  const auto fam = family(cfg);
  const auto ms = m_values(cfg);
  const std::size_t trials = static_cast<std::size_t>(cfg.random_trials);
  std::vector<std::int64_t> at_least_span(fam.size() * trials), strict(fam.size() * trials);

  sweep(r, cfg, fam.size() * trials, [&](std::size_t idx, Tally& t) {
    const std::size_t b = idx / trials, trial = idx % trials;
    const VanishingSequence& a = fam[b];
    SeededRng rng(SeededRng::mix(cfg.seed, b, trial));
    const JetSystem sys = perturbed_model(a, kTail, rng);
    for (int m : ms) {
      const std::string in = label(a, m) + " trial=" + std::to_string(trial);
      const Int s = span(a, m);
      const Int d = sym_power_dim(sys, m);
      const FiltrationProfile prof = filtration_profile(sys, m);
      const BigradedDims model = bigraded_dims(a, m);
      t.at_most(in + " dim S_m <= span", s, d);
      for (const auto& [j, dim] : prof.dims) t.at_most(in + " weight " + std::to_string(j), model.dim_J_at(j), dim);
      t.equal(in + " rank-nullity", binom(m + a.n(), a.n()) - d, prof.dim_I);
      at_least_span[idx] += d >= s;
      strict[idx] += d > s;
    }
  });
  const auto total = [](const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  const std::int64_t cases = static_cast<std::int64_t>(fam.size() * trials * ms.size());
  r.notes.push_back("bases: " + std::to_string(fam.size()) + ", systems per base: " + std::to_string(trials));
  r.notes.push_back("dim S_m >= span held in " + std::to_string(total(at_least_span)) + " of " +
                    std::to_string(cases) + " cases, strictly in " + std::to_string(total(strict)));
}

void suite_prop46_47(SuiteReport& r, const SweepConfig& cfg) {
  constexpr int kTail = 3;
  std::vector<VanishingSequence> bases;
  for (int n = std::max(3, cfg.n_range.first); n <= cfg.n_range.second; ++n) {
    bases.push_back(standard_sequence(n));
    for (auto& a : near_ap_pair(n)) bases.push_back(a);
  }
  const int m = cfg.m_range.first;
  const int t_max = cfg.m_range.second;
  const std::size_t per_base = 1 + static_cast<std::size_t>(cfg.random_trials);

  sweep(r, cfg, bases.size() * per_base, [&](std::size_t idx, Tally& t) {
    const std::size_t b = idx / per_base, k = idx % per_base;
    const VanishingSequence& a = bases[b];
    JetSystem sys = monomial_model(a);
    std::string in = label(a) + " monomial";
    if (k > 0) {
      SeededRng rng(SeededRng::mix(cfg.seed, b, k));
      sys = reparametrized_model(a, kTail, rng);
      in = label(a) + " reparametrized trial=" + std::to_string(k);
    }
    const PropagationReport rep = check_ideal_propagation(sys, m, t_max);
    t.truth(in + " propagation passed (" + rep.detail + ")", true, rep.status == PropagationStatus::Passed);
    for (const auto& [tt, mr] : rep.maximality) t.equal(in + " t=" + std::to_string(tt) + " maximal", mr.dim_S_model, mr.dim_S);
    for (const auto& [tt, dims] : rep.linear_multiples) {
      const std::string at = in + " t=" + std::to_string(tt);
      t.equal(at + " R_1 I_t = I_{t+1}", dims.second, dims.first);
      t.at_most(at + " R_1 I_t inside I_{t+1}", dims.second, dims.first);
    }
  });
  r.notes.push_back("bases: " + std::to_string(bases.size()) + ", systems per base: " + std::to_string(per_base));
}

void suite_thm14_15(SuiteReport& r, const SweepConfig& cfg) {
  struct Case {
    VanishingSequence a;
    bool ap;
  };
  std::vector<Case> cases;
  for (int n = std::max(2, cfg.n_range.first); n <= cfg.n_range.second; ++n) cases.push_back({standard_sequence(n), true});
  for (int n = std::max(3, cfg.n_range.first); n <= cfg.n_range.second; ++n) cases.push_back({elliptic_flex_sequence(n), false});
  const auto ms = m_values(cfg);

  sweep(r, cfg, cases.size(), [&](std::size_t i, Tally& t) {
    const auto& [a, ap] = cases[i];
    const int n = a.n();
    for (int m : ms) {
      const Int total = binom(m + n, n);
      const Int bound = as_int(ap ? max_hypersurfaces(n, m) : next_hypersurface_bound(n, m));
      const Int closed = ap ? total - m * n - 1 : total - m * (n + 1);
      const Int h0 = total - sym_power_dim(monomial_model(a), m);
      t.equal(label(a, m) + " hypersurfaces through the model", bound, h0);
      t.equal(label(a, m) + " closed form", closed, h0);
      for (int k = 0; k < cfg.random_trials; ++k) {
        SeededRng rng(SeededRng::mix(SeededRng::mix(cfg.seed, i, k), static_cast<std::uint64_t>(m)));
        const Int h = total - sym_power_dim(perturbed_model(a, 2, rng), m);
        t.at_most(label(a, m) + " perturbed trial=" + std::to_string(k), bound, h);
      }
    }
  });
  Tally t(cfg.falsify);
  for (int n = 2; n <= 20; ++n) t.equal("n=" + std::to_string(n) + " quadrics", as_int(quadric_bound(n - 1)), as_int(max_hypersurfaces(n, 2)));
  for (int n = 3; n <= 20; ++n)
    t.equal("n=" + std::to_string(n) + " quadrics, second bound", as_int(quadric_bound(n - 1)) - 1, as_int(next_hypersurface_bound(n, 2)));
  merge(r, t);
}

void suite_prop37(SuiteReport& r, const SweepConfig& cfg) {
  Tally t(cfg.falsify);
  for (int n = std::max(2, cfg.n_range.first); n <= cfg.n_range.second; ++n) {
    const VanishingSequence flex = elliptic_flex_sequence(n);
    const Int budget = as_int(pluecker_budget(n, n + 1, 1));
    const std::string in = "n=" + std::to_string(n);
    t.equal(in + " budget", (n + 1) * (n + 1), budget);
    t.equal(in + " flex weight", 1, inflection_weight(flex));
    t.equal(in + " flex span at m=2", 2 * n + 2, span(flex, 2));
    t.at_most(in + " one point within the budget", budget, inflection_weight(flex));
    const std::vector<Int> ones(static_cast<std::size_t>(budget), 1);
    t.truth(in + " budget met by (n+1)^2 flexes", true, check_weight_budget(n, n + 1, 1, ones));
    t.truth(in + " budget missed by one fewer", false,
            check_weight_budget(n, n + 1, 1, std::span<const Int>(ones).first(ones.size() - 1)));
  }
  merge(r, t);
}

using SuiteFn = void (*)(SuiteReport&, const SweepConfig&);

struct SuiteEntry {
  SuiteFn run;
  SweepConfig defaults;
};

SweepConfig make(std::pair<int, int> n, Int max_entry, std::pair<int, int> m, int trials = 0) {
  SweepConfig c;
  c.n_range = n;
  c.max_entry = max_entry;
  c.m_range = m;
  c.random_trials = trials;
  return c;
}

const std::map<std::string, SuiteEntry, std::less<>>& registry() {
  static const std::map<std::string, SuiteEntry, std::less<>> table{
      {"prop33", {suite_prop33, make({1, 6}, 12, {2, 5})}},
      {"cor43", {suite_cor43, make({1, 6}, 12, {2, 5}, 10000)}},
      {"prop41", {suite_prop41, make({1, 4}, 8, {1, 5})}},
      {"prop49_410", {suite_prop49_410, make({1, 5}, 10, {1, 1})}},
      {"prop51", {suite_prop51, make({2, 5}, 0, {2, 6})}},
      {"rem53", {suite_rem53, make({2, 2}, 3, {2, 3})}},
      {"prop44_45", {suite_prop44_45, make({1, 3}, 6, {2, 3}, 200)}},
      {"prop46_47", {suite_prop46_47, make({3, 5}, 0, {2, 5}, 2)}},
      {"thm14_15", {suite_thm14_15, make({2, 5}, 0, {2, 4}, 10)}},
      {"prop37", {suite_prop37, make({2, 10}, 0, {2, 2})}},
  };
  return table;
}

const SuiteEntry& lookup(std::string_view id) {
  const auto& table = registry();
  auto it = table.find(id);
  if (it == table.end()) throw Error(ErrorCode::UnknownSuite, "no suite named '" + std::string(id) + "'");
  return it->second;
}

}  // namespace

SweepConfig default_config(std::string_view suite) { return lookup(suite).defaults; }

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"prop33",    "cor43",     "prop41",    "prop49_410", "prop51",
                                            "rem53",     "prop44_45", "prop46_47", "thm14_15",   "prop37"};
  return ids;
}

std::string to_json(const SuiteReport& report, bool with_time) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["checked"] = report.checked;
  j["failure_count"] = report.failure_count;
  j["failures"] = nlohmann::ordered_json::array();
  for (const Failure& f : report.failures)
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  j["notes"] = report.notes;
  if (with_time) j["seconds"] = report.seconds;
  return j.dump(2);
}

SuiteReport run_suite(std::string_view id, const SweepConfig& cfg) {
  const SuiteEntry& entry = lookup(id);
  require_ranges(cfg);
  SuiteReport report;
  report.suite = std::string(id);
  const auto start = std::chrono::steady_clock::now();
  entry.run(report, cfg);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cfg.report_path) {
    std::ofstream out(*cfg.report_path);
    if (!out) throw Error(ErrorCode::PreconditionViolated, "cannot write " + *cfg.report_path);
    out << to_json(report) << '\n';
  }
  return report;
}

SuiteReport run_suite(std::string_view id) { return run_suite(id, default_config(id)); }

std::vector<SuiteReport> run_all(const std::optional<SweepConfig>& override) {
  std::vector<SuiteReport> out;
  for (const auto& id : suite_ids()) {
    if (!override) {
      out.push_back(run_suite(id));
      continue;
    }
    SweepConfig cfg = *override;
    cfg.report_path.reset();  // one file per suite makes no sense here
    out.push_back(run_suite(id, cfg));
  }
  return out;
}

void ensure_passed(const SuiteReport& report) {
  if (report.passed()) return;
  std::string msg = report.suite + ": " + std::to_string(report.failure_count) + " failure(s)";
  if (!report.failures.empty()) {
    const Failure& f = report.failures.front();
    msg += "; first: " + f.input + " expected " + f.expected + " got " + f.got;
  }
  throw Error(ErrorCode::SuiteFailed, msg);
}

}  // namespace spanlab
