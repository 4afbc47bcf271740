#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spanlab/sequences.hpp"

namespace spanlab {

/// Monomial X_0^{k_0} ... X_n^{k_n}, stored as its exponent vector.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  std::size_t variables() const { return exponents.size(); }
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Parses "2,0,1". Throws ParseError or PreconditionViolated on negative exponents.
Monomial parse_monomial(std::string_view text);

Monomial multiply(const Monomial& a, const Monomial& b);
/// Componentwise minimum.
Monomial common_factor(const Monomial& a, const Monomial& b);

/// Sum of a_i * k_i. Throws LengthMismatch.
Int weight(const Monomial& xi, const VanishingSequence& a);

std::vector<int> support(const Monomial& xi);

/// True iff some element of one set lies strictly between two elements of the other.
bool interlaced(std::span<const int> u, std::span<const int> v);

/// All monomials of degree m in `variables` variables, in descending
/// lexicographic order (X_0^m first).
std::vector<Monomial> monomials_of_degree(std::size_t variables, int m);

/// Dimensions of the weight-graded pieces of R_m, J^A_m and S^A_m.
struct BigradedDims {
  int m;
  std::map<Int, Int> per_weight;  // weight -> number of degree-m monomials of that weight
  Int dim_J;
  Int dim_S;

  /// max(0, per_weight[j] - 1): dimension of the weight-j part of J^A_m.
  Int dim_J_at(Int j) const;
};

BigradedDims bigraded_dims(const VanishingSequence& a, int m);

/// xi and eta are t-neighbors when they are distinct, of equal degree and
/// weight, and differ by a degree-t relation: xi = lambda*alpha and
/// eta = lambda*beta with deg alpha = deg beta = t. Equivalently
/// deg(xi) - deg(gcd(xi, eta)) <= t (for deg >= t).
bool are_t_neighbors(const Monomial& xi, const Monomial& eta, const VanishingSequence& a, int t);

/// Number of exponent coordinates in which xi and eta differ.
int differing_coordinates(const Monomial& xi, const Monomial& eta);

/// All degree-m t-neighbors of xi, in descending lexicographic order.
std::vector<Monomial> t_neighbors(const Monomial& xi, const VanishingSequence& a, int t, int m);

struct EquivalenceReport {
  int m;
  int t;
  Int classes_by_weight;
  Int components;
  bool generated;
  std::optional<std::pair<Monomial, Monomial>> witness;
};

/// Splits the degree-m monomials into weight classes and each class into
/// t-equivalence components (union-find over the pairwise neighbor relation).
/// generated == (components == classes), i.e. J^A_m = R_{m-t} J^A_t.
/// Requires m >= t >= 2.
EquivalenceReport equivalence_report(const VanishingSequence& a, int m, int t);

struct GenerationDegree {
  /// Largest degree of a minimal generator of J^A (at least the floor), when
  /// it is certified below m_cap.
  std::optional<int> degree;
  /// Degrees in [2, m_cap] that carry new minimal generators.
  std::vector<int> generator_degrees;
  int m_cap;
};

/// Degree m carries new generators iff J^A_m != R_1 J^A_{m-1}, which is the
/// (m-1)-equivalence test in degree m. The result is certified only if the
/// last such degree is below m_cap.
GenerationDegree generation_degree(const VanishingSequence& a, int m_cap, int floor = 2);

/// A legal game move: one piece each from squares (from_i, from_j) goes to
/// (to_i, to_j), with a_{from_i} + a_{from_j} = a_{to_i} + a_{to_j}.
struct Move {
  int from_i, from_j, to_i, to_j;
  friend bool operator==(const Move&, const Move&) = default;
};

Move inverse(const Move& mv);

/// Throws PreconditionViolated when the move is illegal on xi.
Monomial apply_move(const Monomial& xi, const Move& mv, const VanishingSequence& a);

struct MoveTrace {
  bool equivalent;
  std::vector<Move> moves;  // empty unless equivalent
  /// Component ids of xi and eta inside their weight class when not equivalent.
  std::optional<std::pair<int, int>> components;
};

/// Shortest sequence of game moves from xi to eta (breadth-first search).
/// Throws PreconditionViolated when degrees or weights differ.
MoveTrace move_trace(const Monomial& xi, const Monomial& eta, const VanishingSequence& a);

/// Constructive strategy: strip common variables, otherwise walk two pieces of
/// one position towards each other along an arithmetic-progression stretch of
/// the sequence until one lands in the other's support. Returns nullopt when
/// the strategy gets stuck (it is only guaranteed to succeed when the
/// sequence is an arithmetic progression).
std::optional<std::vector<Move>> constructive_trace(const Monomial& xi, const Monomial& eta,
                                                    const VanishingSequence& a);

}  // namespace spanlab
