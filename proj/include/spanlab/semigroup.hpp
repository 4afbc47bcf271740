#pragma once

#include <optional>
#include <vector>

#include "spanlab/sequences.hpp"

namespace spanlab {

/// Numerical semigroup given by generators, with its gaps listed explicitly.
struct NumericalSemigroup {
  std::vector<Int> generators;  // sorted, duplicate-free
  std::vector<Int> gaps;        // sorted
  Int frobenius;                // -1 when there are no gaps

  bool contains(Int value) const;
};

/// Sieve of representable integers, stopped once min(generators) consecutive
/// representable integers appear (everything beyond is representable too).
/// Throws EmptyGenerators, PreconditionViolated (generator < 1) or GcdNotOne.
NumericalSemigroup semigroup_of(std::vector<Int> generators);

struct CurveInvariants {
  Int degree;
  Int arithmetic_genus;
  Int L0;
  Int Linf;
};

/// Degree and arithmetic genus of the monomial curve t -> (t^{b_0}:...:t^{b_n})
/// where b is the normalized form of a. L0 counts gaps of <b_1..b_n>, Linf
/// those of <b_n - b_{n-1}, ..., b_n - b_1, b_n>.
CurveInvariants curve_invariants(const VanishingSequence& a);

struct HilbertPolynomial {
  Int leading;
  Int constant;
  Int operator()(Int m) const { return checked_add(checked_mul(leading, m), constant); }
};

HilbertPolynomial hilbert_polynomial(const VanishingSequence& a);

/// Smallest m0 >= 1 with span(a, m) == P(m) for every m in [m0, m_cap], or
/// nullopt when even span(a, m_cap) misses P(m_cap).
std::optional<int> stabilization_threshold(const VanishingSequence& a, int m_cap);

}  // namespace spanlab
