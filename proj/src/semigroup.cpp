#include "spanlab/semigroup.hpp"

#include <algorithm>

#include "spanlab/span.hpp"

namespace spanlab {

bool NumericalSemigroup::contains(Int value) const {
  if (value < 0) return false;
  return !std::binary_search(gaps.begin(), gaps.end(), value);
}

NumericalSemigroup semigroup_of(std::vector<Int> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.front() < 1) throw Error(ErrorCode::PreconditionViolated, "generators must be >= 1");
  if (gcd_of(generators) != 1)
    throw Error(ErrorCode::GcdNotOne, "generators have a common factor; the gap set is infinite");

  const Int smallest = generators.front();
  std::vector<char> representable{1};
  std::vector<Int> gaps;
  Int run = 1;
  for (Int k = 1; run < smallest; ++k) {
    char hit = 0;
    for (Int g : generators) {
      if (g > k) break;
      if (representable[k - g]) {
        hit = 1;
        break;
      }
    }
    representable.push_back(hit);
    if (hit) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(k);
    }
  }
  const Int frob = gaps.empty() ? -1 : gaps.back();
  return {std::move(generators), std::move(gaps), frob};
}

CurveInvariants curve_invariants(const VanishingSequence& a) {
  const VanishingSequence b = normalize(a).sequence;
  const int n = b.n();
  std::vector<Int> zero_side(b.entries().begin() + 1, b.entries().end());
  std::vector<Int> infinity_side;
  for (int i = n - 1; i >= 0; --i) infinity_side.push_back(b.back() - b[i]);
  const Int l0 = static_cast<Int>(semigroup_of(std::move(zero_side)).gaps.size());
  const Int linf = static_cast<Int>(semigroup_of(std::move(infinity_side)).gaps.size());
  return {b.back(), l0 + linf, l0, linf};
}

HilbertPolynomial hilbert_polynomial(const VanishingSequence& a) {
  const CurveInvariants inv = curve_invariants(a);
  return {inv.degree, 1 - inv.arithmetic_genus};
}

std::optional<int> stabilization_threshold(const VanishingSequence& a, int m_cap) {
  if (m_cap < 2) throw Error(ErrorCode::PreconditionViolated, "m_cap must be >= 2");
  const VanishingSequence b = normalize(a).sequence;
  const HilbertPolynomial p = hilbert_polynomial(b);
  const std::vector<Int> spans = span_profile(b, m_cap);
  std::optional<int> threshold;
  for (int m = m_cap; m >= 1; --m) {
    if (spans[m - 1] != p(m)) break;
    threshold = m;
  }
  return threshold;
}

}  // namespace spanlab
