#include "spanlab/span.hpp"

#include <algorithm>

namespace spanlab {

std::string_view to_string(SpanVerdict v) {
  switch (v) {
    case SpanVerdict::ArithmeticProgression: return "ARITHMETIC_PROGRESSION";
    case SpanVerdict::NearApHigh: return "NEAR_AP_HIGH";
    case SpanVerdict::NearApLow: return "NEAR_AP_LOW";
    case SpanVerdict::Generic: return "GENERIC";
  }
  return "GENERIC";
}

namespace {

// v + {a_0..a_n}, deduplicated by sorted merge.
std::vector<Int> add_entries(const std::vector<Int>& current, const VanishingSequence& a) {
  std::vector<Int> next;
  std::vector<Int> shifted(current.size());
  std::vector<Int> merged;
  for (Int e : a.entries()) {
    std::transform(current.begin(), current.end(), shifted.begin(),
                   [e](Int v) { return checked_add(v, e); });
    merged.clear();
    merged.reserve(next.size() + shifted.size());
    std::set_union(next.begin(), next.end(), shifted.begin(), shifted.end(),
                   std::back_inserter(merged));
    next.swap(merged);
  }
  return next;
}

}  // namespace

SumsetTable power_sumset(const VanishingSequence& a, int m) {
  if (m < 1) throw Error(ErrorCode::PreconditionViolated, "m must be >= 1");
  std::vector<Int> current(a.entries().begin(), a.entries().end());
  for (int j = 2; j <= m; ++j) current = add_entries(current, a);
  return {a, m, std::move(current)};
}

std::vector<Int> span_profile(const VanishingSequence& a, int m_max) {
  std::vector<Int> out;
  if (m_max < 1) return out;
  std::vector<Int> current(a.entries().begin(), a.entries().end());
  out.push_back(static_cast<Int>(current.size()));
  for (int j = 2; j <= m_max; ++j) {
    current = add_entries(current, a);
    out.push_back(static_cast<Int>(current.size()));
  }
  return out;
}

Int span(const VanishingSequence& a, int m) {
  return static_cast<Int>(power_sumset(a, m).values.size());
}

std::vector<Int> chain_values(const VanishingSequence& a, int m) {
  if (m < 1) throw Error(ErrorCode::PreconditionViolated, "m must be >= 1");
  const int n = a.n();
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(m) * n + 1);
  out.push_back(checked_mul(m, a.front()));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      out.push_back(checked_add(checked_add(checked_mul(m - i, a.front()), a[j]),
                                checked_mul(i - 1, a.back())));
  return out;
}

SpanVerdict difference_verdict(const VanishingSequence& a, std::optional<Int>* step) {
  const int n = a.n();
  auto diff = [&](int j) { return a[j] - a[j - 1]; };

  bool ap = true;
  for (int j = 2; j <= n; ++j) ap = ap && diff(j) == diff(1);
  if (ap) {
    if (step) *step = diff(1);
    return SpanVerdict::ArithmeticProgression;
  }
  bool high = true;
  for (int j = 1; j <= n - 1; ++j) high = high && diff(n) == 2 * diff(j);
  if (high) {
    if (step) *step = diff(1);
    return SpanVerdict::NearApHigh;
  }
  bool low = true;
  for (int j = 2; j <= n; ++j) low = low && diff(1) == 2 * diff(j);
  if (low) {
    if (step) *step = diff(n);
    return SpanVerdict::NearApLow;
  }
  if (step) step->reset();
  return SpanVerdict::Generic;
}

SpanClassification classify(const VanishingSequence& a, int m) {
  SpanClassification out{span(a, m), SpanVerdict::Generic, std::nullopt};
  out.verdict = difference_verdict(a, &out.step);
  return out;
}

}  // namespace spanlab
