#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spanlab/sequences.hpp"

namespace spanlab {

/// The set of all sums of exactly m entries of a sequence (with repetition).
struct SumsetTable {
  VanishingSequence sequence;
  int m;
  std::vector<Int> values;  // strictly increasing
};

enum class SpanVerdict { ArithmeticProgression, NearApHigh, NearApLow, Generic };

std::string_view to_string(SpanVerdict v);

struct SpanClassification {
  Int span;
  SpanVerdict verdict;
  /// Common step of the progression; for near-AP verdicts, the undoubled step.
  std::optional<Int> step;
};

/// Iterated sumset v_j = v_{j-1} + {a_0..a_n}, starting at v_1 = entries.
SumsetTable power_sumset(const VanishingSequence& a, int m);

Int span(const VanishingSequence& a, int m);

/// span(a, m) for m = 1..m_max in one incremental pass; index 0 holds m = 1.
std::vector<Int> span_profile(const VanishingSequence& a, int m_max);

/// m*a_0 followed by (m-i)a_0 + a_j + (i-1)a_n for i in [1,m], j in [1,n]:
/// a strictly increasing chain of mn+1 members of the m-fold sumset.
std::vector<Int> chain_values(const VanishingSequence& a, int m);

/// Verdict from the first-difference pattern alone; span is computed
/// separately so the two can be cross-checked.
SpanVerdict difference_verdict(const VanishingSequence& a, std::optional<Int>* step = nullptr);

SpanClassification classify(const VanishingSequence& a, int m);

}  // namespace spanlab
