#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spanlab/monomial_ideal.hpp"
#include "spanlab/sequences.hpp"
#include "spanlab/series.hpp"

namespace spanlab {

/// Sections s_0..s_n of a linear system, expanded at a point in a local
/// parameter t. Each section is a finite coefficient list. With no precision
/// the lists are exact polynomials; with precision N they are only known
/// modulo t^N and anything computed past N is refused.
struct JetSystem {
  std::vector<std::vector<Rational>> sections;
  std::optional<int> precision;

  std::size_t size() const { return sections.size(); }
  /// Largest index carrying a nonzero coefficient over all sections.
  int max_degree() const;
};

/// Reads a sections file: either a JSON array of arrays of "p/q" strings
/// (exact polynomials) or {"precision": N, "sections": [...]}.
JetSystem parse_jet_system(const std::string& json_text);
std::string to_json(const JetSystem& system);

struct AdaptedBasis {
  VanishingSequence sequence;
  /// basis[i] has order a_i, coefficient 1 at t^{a_i}, and zero coefficient at
  /// every other a_j.
  std::vector<std::vector<Rational>> basis;
};

/// Gaussian elimination by leading order. Throws DegenerateWithinTruncation
/// when a row vanishes (or, under a precision, only survives past N - guard).
AdaptedBasis adapted_basis(const JetSystem& system, int guard = 4);

struct RankOptions {
  int guard = 4;
};

/// Working truncation for degree-m products: exact systems use the full
/// product length; precision-limited systems use m*a_n + 1 + guard.
int working_truncation(const JetSystem& system, const VanishingSequence& a, int m, const RankOptions& opts = {});

/// Rank of the span of all degree-m products of the sections (= dim S_m).
/// Precision-limited systems are re-ranked at N + a_n; a change, or a
/// precision too small to evaluate both, raises TruncationTooSmall.
Int sym_power_dim(const JetSystem& system, int m, const RankOptions& opts = {});

/// Rank of the degree-m product matrix evaluated at an explicit truncation.
Int sym_power_dim_at(const JetSystem& system, int m, int truncation);

struct MaximalityReport {
  VanishingSequence sequence;
  int m;
  Int dim_S;         // actual system
  Int dim_S_model;   // monomial model = span
  bool maximal;
};

MaximalityReport is_m_maximal(const JetSystem& system, int m, const RankOptions& opts = {});

/// Weight-graded pieces of the degree-m relation space I_m, with respect to
/// the filtration by monomials of weight >= j in the adapted basis.
struct FiltrationProfile {
  VanishingSequence sequence;
  int m;
  std::map<Int, Int> dims;  // j -> dim(F^j I_m / F^{j+1} I_m), zero entries omitted
  Int dim_I;
};

FiltrationProfile filtration_profile(const JetSystem& system, int m, const RankOptions& opts = {});

/// Basis of I_m as coefficient vectors over monomials_of_degree(n+1, m).
std::vector<std::vector<Rational>> relation_basis(const JetSystem& system, int m, const RankOptions& opts = {});

/// dim of R_1 * I_t inside R_{t+1}.
Int dim_linear_multiples(const JetSystem& system, int t, const RankOptions& opts = {});

enum class PropagationStatus { Passed, HypothesisFailed, AssertionFailed };
std::string_view to_string(PropagationStatus s);

struct PropagationReport {
  VanishingSequence sequence;
  int m;
  int t_max;
  PropagationStatus status;
  std::string detail;
  std::map<int, MaximalityReport> maximality;            // t -> report, t in [m, t_max]
  std::map<int, std::pair<Int, Int>> linear_multiples;   // t -> (dim R_1 I_t, dim I_{t+1})
};

/// Checks the hypotheses (m-maximality and degree-wise generation of J^A in
/// degree m up to t_max), then asserts t-maximality for t in [m, t_max] and
/// dim R_1 I_t = dim I_{t+1} for t in [m, t_max).
PropagationReport check_ideal_propagation(const JetSystem& system, int m, int t_max, const RankOptions& opts = {});

struct DegreeGenus {
  Int degree;
  Int arithmetic_genus;
  std::map<int, Int> dims;  // m -> dim S_m
};

/// Fits dim S_m = d*m + 1 - p_a on [m_lo, m_hi]; throws NotLinearOnRange when
/// the values are not affine-linear there (needs m_hi > m_lo).
DegreeGenus degree_genus_estimate(const JetSystem& system, int m_lo, int m_hi, const RankOptions& opts = {});

/// Sections t^{a_j}.
JetSystem monomial_model(const VanishingSequence& a);

/// Deterministic generator shared by the randomized families. Draws are
/// taken from the raw 64-bit stream so results do not depend on the
/// standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// p/q with p in [-bound, bound], q in [1, bound].
  Rational rational(std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// t^{a_j} plus random rational coefficients on t^k for k in (a_j, a_j + tail].
JetSystem perturbed_model(const VanishingSequence& a, int tail, SeededRng& rng);

/// The monomial curve in another local parameter and adapted frame:
/// u = t + c_2 t^2 + ... + c_{tail+1} t^{tail+1}, s_j = u^{a_j} + sum_{i>j} c_{ij} u^{a_i}.
/// Its relation ideal is a linear change of coordinates of J^A, so it is
/// m-maximal for every m.
JetSystem reparametrized_model(const VanishingSequence& a, int tail, SeededRng& rng);

}  // namespace spanlab
