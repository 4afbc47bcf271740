#include "spanlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spanlab/bounds.hpp"
#include "spanlab/error.hpp"
#include "spanlab/jets.hpp"
#include "spanlab/monomial_ideal.hpp"
#include "spanlab/semigroup.hpp"
#include "spanlab/span.hpp"
#include "spanlab/verify.hpp"

namespace spanlab {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json_output = false;
  std::string seq, gens, monomial, from, to, sections, sections_file, suite, out, kind = "perturbed", weights;
  int m = 2, t = 2, m_cap = 0, m_lo = 1, m_hi = 4, t_max = 5, guard = 4, tail = 2;
  int trials = -1, n_lo = -1, n_hi = -1, m_range_lo = -1, m_range_hi = -1;
  Int n = 3, d = 4, g = 1, c = 1, max_entry = -1;
  std::uint64_t seed = 20240601;
  bool classify = false, values = false, next = false, dedupe = false, falsify = false;
};

struct Outcome {
  json inputs = json::object();
  json result = json::object();
  int exit = kExitOk;
};

json int_list(const std::vector<Int>& v) { return json(v); }

json monomial_json(const Monomial& m) { return m.str(); }

json move_json(const Move& mv) {
  return {{"from", {mv.from_i, mv.from_j}}, {"to", {mv.to_i, mv.to_j}}};
}

json dims_map(const std::map<Int, Int>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

JetSystem load_system(const Options& o) {
  if (!o.sections.empty()) return parse_jet_system(o.sections);
  if (o.sections_file.empty()) throw Error(ErrorCode::ParseError, "one of --sections-file or --sections is required");
  std::ifstream in(o.sections_file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + o.sections_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_jet_system(buf.str());
}

// Sections are echoed inline so a replay does not depend on the file.
json jets_inputs(const Options& o, const JetSystem& sys) {
  return {{"sections", to_json(sys)}, {"guard", o.guard}};
}

json maximality_json(const MaximalityReport& r) {
  return {{"sequence", r.sequence.str()}, {"m", r.m}, {"dim_S", r.dim_S}, {"dim_S_model", r.dim_S_model},
          {"maximal", r.maximal}};
}

Outcome run_span(const Options& o) {
  Outcome out;
  const VanishingSequence a = parse_sequence(o.seq);
  out.inputs = {{"seq", a.str()}, {"m", o.m}, {"classify", o.classify}, {"values", o.values}};
  const SumsetTable table = power_sumset(a, o.m);
  out.result["span"] = static_cast<Int>(table.values.size());
  if (o.values) out.result["values"] = int_list(table.values);
  if (o.classify) {
    const SpanClassification cl = classify(a, o.m);
    out.result["verdict"] = std::string(to_string(cl.verdict));
    out.result["step"] = cl.step ? json(*cl.step) : json(nullptr);
  }
  return out;
}

Outcome run_semigroup(const Options& o) {
  Outcome out;
  const std::vector<Int> gens = parse_int_list(o.gens);
  out.inputs = {{"gens", o.gens}};
  const NumericalSemigroup s = semigroup_of(gens);
  out.result = {{"generators", int_list(s.generators)}, {"gaps", int_list(s.gaps)},
                {"gap_count", static_cast<Int>(s.gaps.size())}, {"frobenius", s.frobenius}};
  return out;
}

Outcome run_curve(const Options& o) {
  Outcome out;
  const VanishingSequence a = parse_sequence(o.seq);
  out.inputs = {{"seq", a.str()}};
  const CurveInvariants inv = curve_invariants(a);
  out.result = {{"degree", inv.degree}, {"arithmetic_genus", inv.arithmetic_genus}, {"L0", inv.L0}, {"Linf", inv.Linf}};
  return out;
}

Outcome run_hilbert(const Options& o) {
  Outcome out;
  const VanishingSequence a = parse_sequence(o.seq);
  const int cap = o.m_cap > 0 ? o.m_cap : static_cast<int>(4 * a.back());
  out.inputs = {{"seq", a.str()}, {"m-cap", cap}};
  const HilbertPolynomial p = hilbert_polynomial(a);
  const auto m0 = stabilization_threshold(a, cap);
  out.result = {{"leading", p.leading}, {"constant", p.constant}, {"threshold", m0 ? json(*m0) : json(nullptr)},
                {"spans", int_list(span_profile(a, std::max(cap, 1)))}};
  return out;
}

Outcome run_ideal(const std::string& action, const Options& o) {
  Outcome out;
  const VanishingSequence a = parse_sequence(o.seq);
  if (action == "dims") {
    out.inputs = {{"seq", a.str()}, {"m", o.m}};
    const BigradedDims b = bigraded_dims(a, o.m);
    out.result = {{"dim_S", b.dim_S}, {"dim_J", b.dim_J}, {"per_weight", dims_map(b.per_weight)}};
  } else if (action == "equivalence") {
    out.inputs = {{"seq", a.str()}, {"m", o.m}, {"t", o.t}};
    const EquivalenceReport r = equivalence_report(a, o.m, o.t);
    out.result = {{"generated", r.generated}, {"classes", r.classes_by_weight}, {"components", r.components}};
    out.result["witness"] =
        r.witness ? json::array({monomial_json(r.witness->first), monomial_json(r.witness->second)}) : json(nullptr);
  } else if (action == "gendeg") {
    const int cap = o.m_cap > 0 ? o.m_cap : 8;
    out.inputs = {{"seq", a.str()}, {"m-cap", cap}};
    const GenerationDegree gd = generation_degree(a, cap);
    out.result = {{"degree", gd.degree ? json(*gd.degree) : json(nullptr)},
                  {"generator_degrees", gd.generator_degrees}, {"m_cap", gd.m_cap}};
  } else {  // neighbors
    const Monomial xi = parse_monomial(o.monomial);
    out.inputs = {{"seq", a.str()}, {"monomial", xi.str()}, {"t", o.t}};
    json list = json::array();
    for (const Monomial& eta : t_neighbors(xi, a, o.t, xi.degree())) list.push_back(monomial_json(eta));
    out.result = {{"neighbors", list}};
  }
  return out;
}

Outcome run_game(const Options& o) {
  Outcome out;
  const VanishingSequence a = parse_sequence(o.seq);
  const Monomial xi = parse_monomial(o.from), eta = parse_monomial(o.to);
  out.inputs = {{"seq", a.str()}, {"from", xi.str()}, {"to", eta.str()}};
  const MoveTrace tr = move_trace(xi, eta, a);
  json moves = json::array();
  for (const Move& mv : tr.moves) moves.push_back(move_json(mv));
  out.result = {{"equivalent", tr.equivalent}, {"moves", moves}};
  if (tr.components) out.result["components"] = {tr.components->first, tr.components->second};
  return out;
}

Outcome run_jets(const std::string& action, const Options& o) {
  Outcome out;
  const RankOptions ropts{o.guard};
  if (action == "model") {
    const VanishingSequence a = parse_sequence(o.seq);
    out.inputs = {{"seq", a.str()}, {"kind", o.kind}, {"seed", o.seed}, {"tail", o.tail}};
    SeededRng rng(o.seed);
    JetSystem sys;
    if (o.kind == "monomial") sys = monomial_model(a);
    else if (o.kind == "perturbed") sys = perturbed_model(a, o.tail, rng);
    else if (o.kind == "reparametrized") sys = reparametrized_model(a, o.tail, rng);
    else throw Error(ErrorCode::ParseError, "unknown model kind '" + o.kind + "'");
    out.result = json::parse(to_json(sys));
    return out;
  }

  const JetSystem sys = load_system(o);
  out.inputs = jets_inputs(o, sys);
  if (action == "adapted") {
    const AdaptedBasis ab = adapted_basis(sys, o.guard);
    out.result = {{"sequence", ab.sequence.str()}};
  } else if (action == "rank") {
    out.inputs["m"] = o.m;
    out.result = {{"dim_S", sym_power_dim(sys, o.m, ropts)}};
  } else if (action == "maximal") {
    out.inputs["m"] = o.m;
    out.result = maximality_json(is_m_maximal(sys, o.m, ropts));
  } else if (action == "profile") {
    out.inputs["m"] = o.m;
    const FiltrationProfile p = filtration_profile(sys, o.m, ropts);
    out.result = {{"sequence", p.sequence.str()}, {"dim_I", p.dim_I}, {"dims", dims_map(p.dims)}};
  } else if (action == "estimate") {
    out.inputs["m-lo"] = o.m_lo;
    out.inputs["m-hi"] = o.m_hi;
    const DegreeGenus dg = degree_genus_estimate(sys, o.m_lo, o.m_hi, ropts);
    json dims = json::object();
    for (const auto& [m, v] : dg.dims) dims[std::to_string(m)] = v;
    out.result = {{"degree", dg.degree}, {"arithmetic_genus", dg.arithmetic_genus}, {"dims", dims}};
  } else {  // propagate
    out.inputs["m"] = o.m;
    out.inputs["t-max"] = o.t_max;
    const PropagationReport r = check_ideal_propagation(sys, o.m, o.t_max, ropts);
    json maximality = json::object(), multiples = json::object();
    for (const auto& [t, mr] : r.maximality) maximality[std::to_string(t)] = maximality_json(mr);
    for (const auto& [t, p] : r.linear_multiples)
      multiples[std::to_string(t)] = {{"dim_R1_I_t", p.first}, {"dim_I_next", p.second}};
    out.result = {{"sequence", r.sequence.str()}, {"status", std::string(to_string(r.status))},
                  {"detail", r.detail}, {"maximality", maximality}, {"linear_multiples", multiples}};
    if (r.status == PropagationStatus::HypothesisFailed) out.exit = kExitDomain;
    if (r.status == PropagationStatus::AssertionFailed) out.exit = kExitSuite;
  }
  return out;
}

Outcome run_bounds(const std::string& action, const Options& o) {
  Outcome out;
  if (action == "hypersurfaces") {
    out.inputs = {{"n", o.n}, {"m", o.m}, {"next", o.next}};
    const BigInt v = o.next ? next_hypersurface_bound(o.n, o.m) : max_hypersurfaces(o.n, o.m);
    out.result = {{"bound", to_decimal(v)}};
  } else if (action == "quadrics") {
    out.inputs = {{"c", o.c}};
    out.result = {{"bound", to_decimal(quadric_bound(o.c))}};
  } else {  // pluecker
    out.inputs = {{"n", o.n}, {"d", o.d}, {"g", o.g}};
    out.result = {{"budget", to_decimal(pluecker_budget(o.n, o.d, o.g))}};
    if (!o.weights.empty()) {
      const std::vector<Int> w = parse_int_list(o.weights);
      out.inputs["weights"] = o.weights;
      out.result["weight_sum"] = std::accumulate(w.begin(), w.end(), Int{0});
      out.result["matches"] = check_weight_budget(o.n, o.d, o.g, w);
    }
  }
  return out;
}

json report_json(const SuiteReport& r) { return json::parse(to_json(r, false)); }

Outcome run_verify(const Options& o) {
  Outcome out;
  const bool all = o.suite == "all";
  SweepConfig cfg = default_config(all ? "prop33" : o.suite);
  const bool custom = o.trials >= 0 || o.max_entry >= 0 || o.n_lo >= 0 || o.n_hi >= 0 || o.m_range_lo >= 0 ||
                      o.m_range_hi >= 0 || o.m_cap > 0 || o.dedupe || o.falsify;
  if (o.trials >= 0) cfg.random_trials = o.trials;
  if (o.max_entry >= 0) cfg.max_entry = o.max_entry;
  if (o.n_lo >= 0) cfg.n_range.first = o.n_lo;
  if (o.n_hi >= 0) cfg.n_range.second = o.n_hi;
  if (o.m_range_lo >= 0) cfg.m_range.first = o.m_range_lo;
  if (o.m_range_hi >= 0) cfg.m_range.second = o.m_range_hi;
  if (o.m_cap > 0) cfg.m_cap = o.m_cap;
  cfg.seed = o.seed;
  cfg.dedupe_symmetry = o.dedupe;
  cfg.falsify = o.falsify;

  out.inputs = {{"suite", o.suite}, {"seed", o.seed}, {"falsify", o.falsify}, {"dedupe", o.dedupe}};
  // Only the overrides that were given, so a replay takes the same path.
  const auto echo = [&](const char* key, Int value, bool given) {
    if (given) out.inputs[key] = value;
  };
  echo("trials", o.trials, o.trials >= 0);
  echo("max-entry", o.max_entry, o.max_entry >= 0);
  echo("n-lo", o.n_lo, o.n_lo >= 0);
  echo("n-hi", o.n_hi, o.n_hi >= 0);
  echo("m-lo", o.m_range_lo, o.m_range_lo >= 0);
  echo("m-hi", o.m_range_hi, o.m_range_hi >= 0);
  echo("m-cap", o.m_cap, o.m_cap > 0);

  std::vector<SuiteReport> reports;
  if (all) {
    if (custom) {
      reports = run_all(cfg);
    } else {
      // Defaults per suite, with the requested seed.
      for (const auto& id : suite_ids()) {
        SweepConfig c = default_config(id);
        c.seed = o.seed;
        reports.push_back(run_suite(id, c));
      }
    }
  } else {
    reports.push_back(run_suite(o.suite, cfg));
  }

  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) throw Error(ErrorCode::PreconditionViolated, "cannot write " + o.out);
    if (reports.size() == 1) {
      file << to_json(reports.front()) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(json::parse(to_json(r)));
      file << arr.dump(2) << '\n';
    }
  }

  bool passed = true;
  if (all) {
    out.result = json::array();
    for (const auto& r : reports) out.result.push_back(report_json(r));
  } else {
    out.result = report_json(reports.front());
  }
  for (const auto& r : reports) passed = passed && r.passed();
  if (!passed) out.exit = kExitSuite;
  return out;
}

void print_plain(const std::string& command, const json& result, std::ostream& out) {
  out << command << '\n';
  if (result.is_object()) {
    for (const auto& [key, value] : result.items()) {
      if (value.is_array() && !value.empty() && value.front().is_object()) {
        out << "  " << key << ":\n";
        for (const auto& item : value) out << "    " << item.dump() << '\n';
        continue;
      }
      out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  } else {
    for (const auto& item : result)
      out << "  " << item.value("suite", std::string()) << ": checked " << item.value("checked", 0)
          << ", failures " << item.value("failure_count", 0) << '\n';
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Vanishing sequences, spans and monomial curves", "spanlab"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_output, "Print a JSON envelope");
  app.set_version_flag("--version", std::string(kVersion));

  auto seq_opt = [&](CLI::App* sub) { sub->add_option("--seq", o.seq, "Sequence, e.g. 0,1,3")->required(); };
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& about) {
    CLI::App* s = parent->add_subcommand(name, about);
    s->fallthrough();
    return s;
  };

  CLI::App* span_cmd = sub(&app, "span", "Size of the m-fold sumset");
  seq_opt(span_cmd);
  span_cmd->add_option("--m", o.m, "Number of summands")->required();
  span_cmd->add_flag("--classify", o.classify, "Report the difference verdict");
  span_cmd->add_flag("--values", o.values, "List the sums");

  CLI::App* semi_cmd = sub(&app, "semigroup", "Gaps of a numerical semigroup");
  semi_cmd->add_option("--gens", o.gens, "Generators, e.g. 3,5")->required();

  CLI::App* curve_cmd = sub(&app, "curve", "Degree and arithmetic genus of the monomial curve");
  seq_opt(curve_cmd);

  CLI::App* hilb_cmd = sub(&app, "hilbert", "Hilbert polynomial and stabilization threshold");
  seq_opt(hilb_cmd);
  hilb_cmd->add_option("--m-cap", o.m_cap, "Largest m examined (default 4*a_n)");

  CLI::App* ideal_cmd = sub(&app, "ideal", "Monomial ideal of the curve");
  ideal_cmd->require_subcommand(1);
  CLI::App* ideal_dims = sub(ideal_cmd, "dims", "Bigraded dimensions in degree m");
  seq_opt(ideal_dims);
  ideal_dims->add_option("--m", o.m)->required();
  CLI::App* ideal_eq = sub(ideal_cmd, "equivalence", "Is degree m generated from degree t");
  seq_opt(ideal_eq);
  ideal_eq->add_option("--m", o.m)->required();
  ideal_eq->add_option("--t", o.t, "Neighbor degree")->capture_default_str();
  CLI::App* ideal_gd = sub(ideal_cmd, "gendeg", "Generation degree up to a cap");
  seq_opt(ideal_gd);
  ideal_gd->add_option("--m-cap", o.m_cap, "Largest degree examined (default 8)");
  CLI::App* ideal_nb = sub(ideal_cmd, "neighbors", "t-neighbors of a monomial");
  seq_opt(ideal_nb);
  ideal_nb->add_option("--monomial", o.monomial, "Exponent vector, e.g. 2,0,1")->required();
  ideal_nb->add_option("--t", o.t)->capture_default_str();

  CLI::App* game_cmd = sub(&app, "game", "Pair-exchange moves between monomials");
  game_cmd->require_subcommand(1);
  CLI::App* game_trace = sub(game_cmd, "trace", "Shortest move sequence");
  seq_opt(game_trace);
  game_trace->add_option("--from", o.from)->required();
  game_trace->add_option("--to", o.to)->required();

  CLI::App* jets_cmd = sub(&app, "jets", "Truncated power series systems");
  jets_cmd->require_subcommand(1);
  std::vector<CLI::App*> jets_actions;
  for (const auto& [name, about] : std::vector<std::pair<std::string, std::string>>{
           {"rank", "dim S_m by exact rank"},
           {"maximal", "Compare dim S_m with the monomial model"},
           {"profile", "Weight filtration of the degree-m relations"},
           {"estimate", "Degree and genus from a linear stretch of dim S_m"},
           {"propagate", "Maximality and relation propagation from degree m"},
           {"adapted", "Adapted vanishing sequence"}}) {
    CLI::App* a = sub(jets_cmd, name, about);
    auto* file = a->add_option("--sections-file", o.sections_file, "JSON file of sections");
    auto* inline_opt = a->add_option("--sections", o.sections, "Sections as inline JSON");
    file->excludes(inline_opt);
    a->add_option("--guard", o.guard, "Extra columns above m*a_n")->capture_default_str();
    if (name == "rank" || name == "maximal" || name == "profile" || name == "propagate")
      a->add_option("--m", o.m)->capture_default_str();
    if (name == "estimate") {
      a->add_option("--m-lo", o.m_lo)->capture_default_str();
      a->add_option("--m-hi", o.m_hi)->capture_default_str();
    }
    if (name == "propagate") a->add_option("--t-max", o.t_max)->capture_default_str();
    jets_actions.push_back(a);
  }
  CLI::App* jets_model = sub(jets_cmd, "model", "Generate a system with a given vanishing sequence");
  seq_opt(jets_model);
  jets_model->add_option("--kind", o.kind, "monomial, perturbed or reparametrized")->capture_default_str();
  jets_model->add_option("--seed", o.seed)->capture_default_str();
  jets_model->add_option("--tail", o.tail, "Number of perturbation coefficients")->capture_default_str();

  CLI::App* bounds_cmd = sub(&app, "bounds", "Closed-form bounds");
  bounds_cmd->require_subcommand(1);
  CLI::App* b_hyp = sub(bounds_cmd, "hypersurfaces", "Hypersurfaces of degree m containing the curve");
  b_hyp->add_option("--n", o.n)->required();
  b_hyp->add_option("--m", o.m)->required();
  b_hyp->add_flag("--next", o.next, "Bound for curves other than the rational normal curve");
  CLI::App* b_quad = sub(bounds_cmd, "quadrics", "Quadrics through a curve of codimension c");
  b_quad->add_option("--c", o.c)->required();
  CLI::App* b_pl = sub(bounds_cmd, "pluecker", "Total inflection weight");
  b_pl->add_option("--n", o.n)->required();
  b_pl->add_option("--d", o.d)->required();
  b_pl->add_option("--g", o.g)->required();
  b_pl->add_option("--weights", o.weights, "Comma-separated point weights");

  CLI::App* verify_cmd = sub(&app, "verify", "Run verification suites");
  verify_cmd->add_option("--suite", o.suite, "Suite id or 'all'")->required();
  verify_cmd->add_option("--out", o.out, "Write the report here");
  verify_cmd->add_option("--seed", o.seed)->capture_default_str();
  verify_cmd->add_option("--trials", o.trials);
  verify_cmd->add_option("--max-entry", o.max_entry);
  verify_cmd->add_option("--n-lo", o.n_lo);
  verify_cmd->add_option("--n-hi", o.n_hi);
  verify_cmd->add_option("--m-lo", o.m_range_lo);
  verify_cmd->add_option("--m-hi", o.m_range_hi);
  verify_cmd->add_option("--m-cap", o.m_cap);
  verify_cmd->add_flag("--dedupe", o.dedupe, "Skip sequences whose reversal sorts first");
  verify_cmd->add_flag("--falsify", o.falsify, "Corrupt expected values (the run must fail)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty() && !args.empty() && !args.front().starts_with('-'))
      err << "error: unknown command '" << args.front() << "'\n\n";
    else
      err << "error: " << e.what() << "\n\n";
    const CLI::App* failed = &app;
    for (CLI::App* s = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); s;
         s = s->get_subcommands().empty() ? nullptr : s->get_subcommands().front())
      failed = s;
    err << failed->help();
    return kExitUsage;
  }

  std::string command;
  const CLI::App* leaf = &app;
  while (!leaf->get_subcommands().empty()) {
    leaf = leaf->get_subcommands().front();
    command += (command.empty() ? "" : " ") + leaf->get_name();
  }
  const std::string top = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    if (top == "span") res = run_span(o);
    else if (top == "semigroup") res = run_semigroup(o);
    else if (top == "curve") res = run_curve(o);
    else if (top == "hilbert") res = run_hilbert(o);
    else if (top == "ideal") res = run_ideal(leaf->get_name(), o);
    else if (top == "game") res = run_game(o);
    else if (top == "jets") res = run_jets(leaf->get_name(), o);
    else if (top == "bounds") res = run_bounds(leaf->get_name(), o);
    else res = run_verify(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::UnknownSuite) return kExitUsage;
    return e.code() == ErrorCode::SuiteFailed ? kExitSuite : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.json_output) {
    json env;
    env["command"] = command;
    env["inputs"] = res.inputs;
    env["result"] = res.result;
    env["version"] = std::string(kVersion);
    env["seconds"] = seconds;
    out << env.dump(2) << '\n';
  } else {
    print_plain(command, res.result, out);
  }
  return res.exit;
}

std::vector<std::string> replay_args(std::string_view envelope_json) {
  const json env = json::parse(envelope_json);
  std::vector<std::string> args;
  std::istringstream words(env.at("command").get<std::string>());
  for (std::string w; words >> w;) args.push_back(w);
  for (const auto& [key, value] : env.at("inputs").items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  args.push_back("--json");
  return args;
}

}  // namespace spanlab
