#include "spanlab/jets.hpp"

#include <algorithm>
#include "json.hpp"

#include "spanlab/span.hpp"

namespace spanlab {

int JetSystem::max_degree() const {
  int deg = 0;
  for (const auto& s : sections)
    for (std::size_t i = 0; i < s.size(); ++i)
      if (sgn(s[i]) != 0) deg = std::max(deg, static_cast<int>(i));
  return deg;
}

JetSystem parse_jet_system(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("sections file is not valid JSON: ") + e.what());
  }
  JetSystem out;
  const nlohmann::json* sections = &doc;
  if (doc.is_object()) {
    if (!doc.contains("sections")) throw Error(ErrorCode::ParseError, "object form needs a 'sections' key");
    sections = &doc.at("sections");
    if (doc.contains("precision")) {
      if (!doc.at("precision").is_number_integer() || doc.at("precision").get<int>() < 1)
        throw Error(ErrorCode::ParseError, "'precision' must be a positive integer");
      out.precision = doc.at("precision").get<int>();
    }
  }
  if (!sections->is_array() || sections->size() < 2)
    throw Error(ErrorCode::ParseError, "sections must be an array of at least two coefficient arrays");
  for (const auto& sec : *sections) {
    if (!sec.is_array()) throw Error(ErrorCode::ParseError, "each section must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : sec) {
      if (c.is_string()) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      } else if (c.is_number_integer()) {
        coeffs.push_back(parse_rational(std::to_string(c.get<long long>())));
      } else {
        throw Error(ErrorCode::ParseError, "coefficients must be \"p/q\" strings or integers");
      }
    }
    out.sections.push_back(std::move(coeffs));
  }
  return out;
}

std::string to_json(const JetSystem& system) {
  nlohmann::json secs = nlohmann::json::array();
  for (const auto& s : system.sections) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& c : s) row.push_back(c.get_str());
    secs.push_back(std::move(row));
  }
  if (!system.precision) return secs.dump();
  return nlohmann::json{{"precision", *system.precision}, {"sections", secs}}.dump();
}

AdaptedBasis adapted_basis(const JetSystem& system, int guard) {
  if (system.size() < 2) throw Error(ErrorCode::TooShort, "a jet system needs at least two sections");
  const int length = system.precision ? *system.precision : system.max_degree() + 1;
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : system.sections) {
    std::vector<Rational> r(static_cast<std::size_t>(length), Rational(0));
    for (std::size_t i = 0; i < s.size() && i < r.size(); ++i) r[i] = s[i];
    rows.push_back(std::move(r));
  }
  auto order_of = [&](const std::vector<Rational>& r) -> int {
    for (int i = 0; i < length; ++i)
      if (sgn(r[i]) != 0) return i;
    return length;
  };

  std::vector<std::vector<Rational>> basis;
  std::vector<Int> orders;
  while (!rows.empty()) {
    auto best = rows.begin();
    int best_order = order_of(*best);
    for (auto it = rows.begin() + 1; it != rows.end(); ++it) {
      const int o = order_of(*it);
      if (o < best_order) {
        best = it;
        best_order = o;
      }
    }
    if (best_order == length)
      throw Error(ErrorCode::DegenerateWithinTruncation, "sections are linearly dependent within the given data");
    if (system.precision && best_order >= length - guard)
      throw Error(ErrorCode::DegenerateWithinTruncation,
                  "leading order " + std::to_string(best_order) + " too close to precision " +
                      std::to_string(length) + "; raise the precision");
    std::vector<Rational> pivot = std::move(*best);
    rows.erase(best);
    const Rational inv = 1 / pivot[best_order];
    for (Rational& c : pivot) c *= inv;
    auto eliminate = [&](std::vector<Rational>& r) {
      if (sgn(r[best_order]) == 0) return;
      const Rational f = r[best_order];
      for (int i = best_order; i < length; ++i) r[i] -= f * pivot[i];
    };
    for (auto& r : rows) eliminate(r);
    for (auto& b : basis) eliminate(b);
    basis.push_back(std::move(pivot));
    orders.push_back(best_order);
  }
  return {VanishingSequence::validate(std::move(orders)), std::move(basis)};
}

int working_truncation(const JetSystem& system, const VanishingSequence& a, int m, const RankOptions& opts) {
  const Int model = checked_add(checked_mul(m, a.back()), 1);
  if (system.precision) return static_cast<int>(model + opts.guard);
  return static_cast<int>(std::max<Int>(model, static_cast<Int>(m) * system.max_degree() + 1));
}

namespace {

// Rows of the degree-m evaluation matrix, one per monomial in
// monomials_of_degree order, each the product series truncated at `truncation`.
std::vector<std::vector<Rational>> product_rows(const std::vector<std::vector<Rational>>& basis, int m,
                                                int truncation) {
  const std::size_t vars = basis.size();
  std::vector<TruncatedSeries> gens;
  for (const auto& b : basis) gens.emplace_back(b, truncation);

  std::map<Monomial, TruncatedSeries> level;
  level.emplace(Monomial{std::vector<int>(vars, 0)}, TruncatedSeries::monomial(0, truncation));
  for (int d = 1; d <= m; ++d) {
    std::map<Monomial, TruncatedSeries> next;
    for (const Monomial& xi : monomials_of_degree(vars, d)) {
      std::size_t i = 0;
      while (xi.exponents[i] == 0) ++i;
      Monomial lower = xi;
      --lower.exponents[i];
      next.emplace(xi, multiply(level.at(lower), gens[i]));
    }
    level.swap(next);
  }
  std::vector<std::vector<Rational>> rows;
  for (const Monomial& xi : monomials_of_degree(vars, m)) rows.push_back(level.at(xi).coefficients());
  return rows;
}

struct StableEvaluation {
  AdaptedBasis adapted;
  int truncation;
  Int rank;
};

StableEvaluation stable_evaluation(const JetSystem& system, int m, const RankOptions& opts) {
  if (m < 0) throw Error(ErrorCode::PreconditionViolated, "degree must be >= 0");
  AdaptedBasis adapted = adapted_basis(system, opts.guard);
  const int w = working_truncation(system, adapted.sequence, m, opts);
  if (!system.precision) {
    const Int r = static_cast<Int>(rank_of(product_rows(adapted.basis, m, w)));
    return {std::move(adapted), w, r};
  }
  const int w2 = w + static_cast<int>(adapted.sequence.back());
  if (w2 > *system.precision)
    throw Error(ErrorCode::TruncationTooSmall, "degree " + std::to_string(m) + " needs precision >= " +
                                                   std::to_string(w2) + ", data has " +
                                                   std::to_string(*system.precision));
  const Int r1 = static_cast<Int>(rank_of(product_rows(adapted.basis, m, w)));
  const Int r2 = static_cast<Int>(rank_of(product_rows(adapted.basis, m, w2)));
  if (r1 != r2)
    throw Error(ErrorCode::TruncationTooSmall, "rank moved from " + std::to_string(r1) + " to " +
                                                   std::to_string(r2) + " when raising the truncation");
  return {std::move(adapted), w2, r2};
}

}  // namespace

Int sym_power_dim(const JetSystem& system, int m, const RankOptions& opts) {
  return stable_evaluation(system, m, opts).rank;
}

Int sym_power_dim_at(const JetSystem& system, int m, int truncation) {
  const AdaptedBasis adapted = adapted_basis(system);
  return static_cast<Int>(rank_of(product_rows(adapted.basis, m, truncation)));
}

MaximalityReport is_m_maximal(const JetSystem& system, int m, const RankOptions& opts) {
  StableEvaluation ev = stable_evaluation(system, m, opts);
  const Int model = span(ev.adapted.sequence, m);
  return {ev.adapted.sequence, m, ev.rank, model, ev.rank == model};
}

FiltrationProfile filtration_profile(const JetSystem& system, int m, const RankOptions& opts) {
  StableEvaluation ev = stable_evaluation(system, m, opts);
  const VanishingSequence& a = ev.adapted.sequence;
  const auto monomials = monomials_of_degree(a.size(), m);
  auto rows = product_rows(ev.adapted.basis, m, ev.truncation);

  std::map<Int, std::vector<std::size_t>, std::greater<>> by_weight;
  for (std::size_t k = 0; k < monomials.size(); ++k) by_weight[weight(monomials[k], a)].push_back(k);

  FiltrationProfile out{a, m, {}, 0};
  RowReducer reducer(static_cast<std::size_t>(ev.truncation));
  Int relations_above = 0;
  for (const auto& [w, indices] : by_weight) {
    for (std::size_t k : indices) reducer.insert(std::move(rows[k]));
    const Int relations = static_cast<Int>(reducer.inserted() - reducer.rank());
    if (relations != relations_above) out.dims[w] = relations - relations_above;
    relations_above = relations;
  }
  out.dim_I = relations_above;
  return out;
}

std::vector<std::vector<Rational>> relation_basis(const JetSystem& system, int m, const RankOptions& opts) {
  StableEvaluation ev = stable_evaluation(system, m, opts);
  auto rows = product_rows(ev.adapted.basis, m, ev.truncation);
  const std::size_t count = rows.size();
  RowReducer reducer(static_cast<std::size_t>(ev.truncation), true);
  for (auto& r : rows) reducer.insert(std::move(r));
  std::vector<std::vector<Rational>> out;
  for (auto dep : reducer.dependencies()) {
    dep.resize(count, Rational(0));
    out.push_back(std::move(dep));
  }
  return out;
}

Int dim_linear_multiples(const JetSystem& system, int t, const RankOptions& opts) {
  const auto relations = relation_basis(system, t, opts);
  const std::size_t vars = system.size();
  const auto lower = monomials_of_degree(vars, t);
  const auto upper = monomials_of_degree(vars, t + 1);
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < upper.size(); ++k) index.emplace(upper[k], k);

  RowReducer reducer(upper.size());
  for (const auto& rel : relations) {
    for (std::size_t i = 0; i < vars; ++i) {
      std::vector<Rational> row(upper.size(), Rational(0));
      for (std::size_t k = 0; k < lower.size(); ++k) {
        if (sgn(rel[k]) == 0) continue;
        Monomial up = lower[k];
        ++up.exponents[i];
        row[index.at(up)] += rel[k];
      }
      reducer.insert(std::move(row));
    }
  }
  return static_cast<Int>(reducer.rank());
}

std::string_view to_string(PropagationStatus s) {
  switch (s) {
    case PropagationStatus::Passed: return "PASSED";
    case PropagationStatus::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case PropagationStatus::AssertionFailed: return "ASSERTION_FAILED";
  }
  return "ASSERTION_FAILED";
}

namespace {

Int binomial_small(Int top, Int k) {
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, top - k + i) / i;
  return r;
}

}  // namespace

PropagationReport check_ideal_propagation(const JetSystem& system, int m, int t_max, const RankOptions& opts) {
  if (m < 2 || t_max < m) throw Error(ErrorCode::PreconditionViolated, "requires t_max >= m >= 2");
  const VanishingSequence a = adapted_basis(system, opts.guard).sequence;
  PropagationReport out{a, m, t_max, PropagationStatus::Passed, "", {}, {}};

  const MaximalityReport base = is_m_maximal(system, m, opts);
  if (!base.maximal) {
    out.status = PropagationStatus::HypothesisFailed;
    out.detail = "system is not " + std::to_string(m) + "-maximal: dim S_m = " + std::to_string(base.dim_S) +
                 ", model = " + std::to_string(base.dim_S_model);
    return out;
  }
  for (int d = m + 1; d <= t_max; ++d) {
    if (!equivalence_report(a, d, m).generated) {
      out.status = PropagationStatus::HypothesisFailed;
      out.detail = "J^A is not generated in degree " + std::to_string(m) + ": J^A_" + std::to_string(d) +
                   " != R_" + std::to_string(d - m) + " J^A_" + std::to_string(m);
      return out;
    }
  }

  const Int vars = static_cast<Int>(a.size());
  for (int t = m; t <= t_max; ++t) {
    MaximalityReport rep = t == m ? base : is_m_maximal(system, t, opts);
    if (!rep.maximal && out.status == PropagationStatus::Passed) {
      out.status = PropagationStatus::AssertionFailed;
      out.detail = "not " + std::to_string(t) + "-maximal";
    }
    out.maximality.emplace(t, std::move(rep));
  }
  for (int t = m; t < t_max; ++t) {
    const Int products = dim_linear_multiples(system, t, opts);
    const Int next = binomial_small(t + 1 + vars - 1, vars - 1) - out.maximality.at(t + 1).dim_S;
    out.linear_multiples.emplace(t, std::make_pair(products, next));
    if (products != next && out.status == PropagationStatus::Passed) {
      out.status = PropagationStatus::AssertionFailed;
      out.detail = "R_1 I_" + std::to_string(t) + " has dimension " + std::to_string(products) + ", I_" +
                   std::to_string(t + 1) + " has " + std::to_string(next);
    }
  }
  return out;
}

DegreeGenus degree_genus_estimate(const JetSystem& system, int m_lo, int m_hi, const RankOptions& opts) {
  if (m_lo < 1 || m_hi <= m_lo) throw Error(ErrorCode::PreconditionViolated, "requires 1 <= m_lo < m_hi");
  DegreeGenus out{0, 0, {}};
  for (int m = m_lo; m <= m_hi; ++m) out.dims[m] = sym_power_dim(system, m, opts);
  const Int d = out.dims.at(m_lo + 1) - out.dims.at(m_lo);
  for (int m = m_lo + 1; m <= m_hi; ++m)
    if (out.dims.at(m) - out.dims.at(m - 1) != d)
      throw Error(ErrorCode::NotLinearOnRange,
                  "dim S_m is not affine-linear on [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) + "]");
  out.degree = d;
  out.arithmetic_genus = 1 - (out.dims.at(m_lo) - d * m_lo);
  return out;
}

JetSystem monomial_model(const VanishingSequence& a) {
  JetSystem out;
  for (Int e : a.entries()) {
    std::vector<Rational> s(static_cast<std::size_t>(e) + 1, Rational(0));
    s.back() = 1;
    out.sections.push_back(std::move(s));
  }
  return out;
}

std::uint64_t SeededRng::mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return splitmix(splitmix(splitmix(seed) ^ a) ^ b);
}

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % width);
}

Rational SeededRng::rational(std::int64_t bound) {
  const std::int64_t p = uniform(-bound, bound);
  const std::int64_t q = uniform(1, bound);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

namespace {

void trim(std::vector<Rational>& s) {
  while (s.size() > 1 && sgn(s.back()) == 0) s.pop_back();
}

}  // namespace

JetSystem perturbed_model(const VanishingSequence& a, int tail, SeededRng& rng) {
  if (tail < 0) throw Error(ErrorCode::PreconditionViolated, "tail length must be >= 0");
  JetSystem out;
  for (Int e : a.entries()) {
    std::vector<Rational> s(static_cast<std::size_t>(e + tail) + 1, Rational(0));
    s[e] = 1;
    for (int k = 1; k <= tail; ++k) s[e + k] = rng.rational(3);
    trim(s);
    out.sections.push_back(std::move(s));
  }
  return out;
}

JetSystem reparametrized_model(const VanishingSequence& a, int tail, SeededRng& rng) {
  if (tail < 0) throw Error(ErrorCode::PreconditionViolated, "tail length must be >= 0");
  const int length = static_cast<int>(a.back()) * (tail + 1) + 1;
  TruncatedSeries u = TruncatedSeries::monomial(1, length);
  for (int k = 2; k <= tail + 1; ++k) u[k] = rng.rational(2);

  std::vector<TruncatedSeries> powers;
  for (Int e : a.entries()) {
    TruncatedSeries p = TruncatedSeries::monomial(0, length);
    for (Int k = 0; k < e; ++k) p = multiply(p, u);
    powers.push_back(std::move(p));
  }
  JetSystem out;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    TruncatedSeries s = powers[j];
    for (std::size_t i = j + 1; i < powers.size(); ++i) s = add(s, scalar_multiply(rng.rational(2), powers[i]));
    std::vector<Rational> coeffs = s.coefficients();
    trim(coeffs);
    out.sections.push_back(std::move(coeffs));
  }
  return out;
}

}  // namespace spanlab
