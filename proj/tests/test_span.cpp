#include "doctest.h"

#include "oracles.hpp"
#include "spanlab/span.hpp"

using namespace spanlab;

TEST_CASE("power_sumset matches pair enumeration") {
  CHECK(power_sumset(parse_sequence("0,1,3"), 2).values == std::vector<Int>{0, 1, 2, 3, 4, 6});
  CHECK(power_sumset(parse_sequence("0,1,2,4"), 2).values == std::vector<Int>{0, 1, 2, 3, 4, 5, 6, 8});
  CHECK(power_sumset(parse_sequence("0,1,4,5"), 2).values == std::vector<Int>{0, 1, 2, 4, 5, 6, 8, 9, 10});
  CHECK(power_sumset(parse_sequence("2,7,9"), 1).values == std::vector<Int>{2, 7, 9});
}

TEST_CASE("span values") {
  CHECK(span(parse_sequence("0,1,2,3"), 2) == 7);
  CHECK(span(parse_sequence("0,1,2,4"), 2) == 8);
  CHECK(span(parse_sequence("0,1,3"), 2) == 6);
  CHECK(span(parse_sequence("0,1,2,4"), 3) == 12);
  CHECK(span_profile(parse_sequence("0,3,5"), 5) == std::vector<Int>{3, 6, 10, 15, 20});
}

TEST_CASE("chain values") {
  CHECK(chain_values(parse_sequence("0,1,2"), 2) == std::vector<Int>{0, 1, 2, 3, 4});
  CHECK(chain_values(parse_sequence("0,1,3"), 2) == std::vector<Int>{0, 1, 3, 4, 6});
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      auto ap = scale(standard_sequence(n), 3);
      CHECK(chain_values(ap, m) == power_sumset(ap, m).values);
    }
}

TEST_CASE("classify") {
  auto c = classify(parse_sequence("0,1,2,4"), 3);
  CHECK(c.span == 12);
  CHECK(c.verdict == SpanVerdict::NearApHigh);
  CHECK(c.step == 1);

  c = classify(parse_sequence("0,2,3,4"), 2);
  CHECK(c.span == 8);
  CHECK(c.verdict == SpanVerdict::NearApLow);
  CHECK(c.step == 1);

  c = classify(parse_sequence("0,1,4,5"), 2);
  CHECK(c.span == 9);
  CHECK(c.verdict == SpanVerdict::Generic);
  CHECK(!c.step);

  c = classify(parse_sequence("3,6,9,12"), 1);
  CHECK(c.span == 4);
  CHECK(c.verdict == SpanVerdict::ArithmeticProgression);
  CHECK(c.step == 3);

  CHECK(to_string(SpanVerdict::NearApLow) == "NEAR_AP_LOW");
}

TEST_CASE("sumset agrees with brute-force multiset enumeration") {
  for (const auto& a : normalized_family(1, 4, 8)) {
    const std::vector<Int> e(a.entries().begin(), a.entries().end());
    for (int m = 1; m <= 4; ++m) {
      const auto brute = oracle::multiset_sums(e, m);
      CAPTURE(a.str());
      CAPTURE(m);
      REQUIRE(power_sumset(a, m).values == std::vector<Int>(brute.begin(), brute.end()));
    }
  }
}

TEST_CASE("span bounds, chain membership and monotone growth") {
  for (const auto& a : normalized_family(1, 5, 9)) {
    const Int n = a.n();
    const auto profile = span_profile(a, 5);
    for (int m = 1; m <= 5; ++m) {
      CAPTURE(a.str());
      CAPTURE(m);
      const Int s = profile[m - 1];
      CHECK(s >= m * n + 1);
      CHECK(s <= std::min(oracle::binom(m + n, n), m * (a.back() - a.front()) + 1));
      const auto table = power_sumset(a, m);
      CHECK(table.values.front() == m * a.front());
      CHECK(table.values.back() == m * a.back());
      const auto chain = chain_values(a, m);
      CHECK(static_cast<Int>(chain.size()) == m * n + 1);
      CHECK(std::adjacent_find(chain.begin(), chain.end(), std::greater_equal<>{}) == chain.end());
      CHECK(std::includes(table.values.begin(), table.values.end(), chain.begin(), chain.end()));
      if (m < 5) CHECK(profile[m] > s);
    }
  }
}

TEST_CASE("span is invariant under translate, scale and reverse") {
  for (const auto& a : normalized_family(1, 4, 8))
    for (int m = 1; m <= 4; ++m) {
      const Int s = span(a, m);
      CHECK(span(translate(a, 5), m) == s);
      CHECK(span(scale(a, 3), m) == s);
      CHECK(span(reverse(a), m) == s);
    }
}
