#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "spanlab/jets.hpp"
#include "spanlab/monomial_ideal.hpp"
#include "spanlab/span.hpp"

using namespace spanlab;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

}  // namespace

TEST_CASE("weight and support") {
  const auto a = parse_sequence("0,1,3");
  CHECK(weight(mono({2, 0, 0}), a) == 0);
  CHECK(weight(mono({0, 3, 0}), a) == 3);
  CHECK(weight(mono({0, 0, 2}), a) == 6);
  CHECK_THROWS_AS(weight(mono({1, 1}), a), Error);

  CHECK(support(mono({2, 0, 1})) == std::vector<int>{0, 2});
  CHECK(support(mono({0, 3, 0})) == std::vector<int>{1});
  CHECK(support(mono({0, 0, 0})).empty());
}

TEST_CASE("interlaced") {
  CHECK(interlaced(std::vector<int>{0, 2}, std::vector<int>{1}));
  CHECK(!interlaced(std::vector<int>{0, 1}, std::vector<int>{2, 3}));
  CHECK(interlaced(std::vector<int>{1}, std::vector<int>{0, 2}));
  CHECK(!interlaced(std::vector<int>{}, std::vector<int>{0, 2}));
  CHECK(!interlaced(std::vector<int>{0, 1}, std::vector<int>{1, 2}));
}

TEST_CASE("monomial enumeration order and count") {
  const auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == mono({2, 0, 0}));
  CHECK(ms[1] == mono({1, 1, 0}));
  CHECK(ms.back() == mono({0, 0, 2}));
  for (std::size_t v = 1; v <= 6; ++v)
    for (int m = 0; m <= 5; ++m)
      CHECK(static_cast<Int>(monomials_of_degree(v, m).size()) == oracle::binom(m + v - 1, v - 1));
}

TEST_CASE("bigraded dims") {
  auto d = bigraded_dims(parse_sequence("0,1,3"), 2);
  CHECK(d.dim_S == 6);
  CHECK(d.dim_J == 0);

  d = bigraded_dims(parse_sequence("0,1,2"), 2);
  CHECK(d.dim_S == 5);
  CHECK(d.dim_J == 1);
  CHECK(d.per_weight.at(2) == 2);
  CHECK(d.dim_J_at(2) == 1);
  CHECK(d.dim_J_at(7) == 0);

  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m) CHECK(bigraded_dims(standard_sequence(n), m).dim_S == m * n + 1);
}

TEST_CASE("bigraded dims agree with the sumset span") {
  for (const auto& a : normalized_family(1, 4, 8))
    for (int m = 1; m <= 4; ++m) {
      const auto d = bigraded_dims(a, m);
      CAPTURE(a.str());
      CHECK(d.dim_S == span(a, m));
      CHECK(d.dim_J + d.dim_S == oracle::binom(m + a.n(), a.n()));
      Int total = 0;
      for (const auto& [w, c] : d.per_weight) total += c;
      CHECK(total == oracle::binom(m + a.n(), a.n()));
    }
}

TEST_CASE("t-neighbors") {
  CHECK(t_neighbors(mono({1, 0, 1}), parse_sequence("0,1,2"), 2, 2) == std::vector<Monomial>{mono({0, 2, 0})});
  CHECK(t_neighbors(mono({2, 0, 1}), parse_sequence("0,1,3"), 2, 3).empty());
  // With cubic relations allowed the cusp relation appears.
  CHECK(t_neighbors(mono({2, 0, 1}), parse_sequence("0,1,3"), 3, 3) == std::vector<Monomial>{mono({0, 3, 0})});
  CHECK(differing_coordinates(mono({1, 0, 1}), mono({0, 2, 0})) == 3);
  CHECK_THROWS_AS(t_neighbors(mono({1, 0, 1}), parse_sequence("0,1,2"), 2, 3), Error);

  // Every quadric-move neighbour in an AP is reachable by a single game move.
  const auto ap = standard_sequence(3);
  for (const auto& xi : monomials_of_degree(4, 3))
    for (const auto& eta : t_neighbors(xi, ap, 2, 3)) {
      const auto tr = move_trace(xi, eta, ap);
      CHECK(tr.equivalent);
      CHECK(tr.moves.size() == 1);
    }
}

TEST_CASE("equivalence reports") {
  auto r = equivalence_report(parse_sequence("0,1,2,4"), 3, 2);
  CHECK(r.generated);
  CHECK(r.components == r.classes_by_weight);
  CHECK(!r.witness);

  r = equivalence_report(parse_sequence("0,1,3"), 3, 2);
  CHECK(!r.generated);
  REQUIRE(r.witness);
  CHECK(r.witness->first == mono({2, 0, 1}));
  CHECK(r.witness->second == mono({0, 3, 0}));

  r = equivalence_report(parse_sequence("0,1,2"), 4, 2);
  CHECK(r.generated);

  CHECK_THROWS_AS(equivalence_report(parse_sequence("0,1,2"), 2, 3), Error);
  CHECK_THROWS_AS(equivalence_report(parse_sequence("0,1,2"), 3, 1), Error);
}

TEST_CASE("generation degree") {
  auto g = generation_degree(parse_sequence("0,1,2,3"), 6);
  REQUIRE(g.degree);
  CHECK(*g.degree == 2);
  CHECK(g.generator_degrees == std::vector<int>{2});

  g = generation_degree(parse_sequence("0,1,3"), 6);
  REQUIRE(g.degree);
  CHECK(*g.degree == 3);
  CHECK(g.generator_degrees == std::vector<int>{3});

  g = generation_degree(parse_sequence("0,2,3,4"), 6);
  REQUIRE(g.degree);
  CHECK(*g.degree == 2);

  // Line: J^A = 0, reported at the floor.
  g = generation_degree(parse_sequence("0,1"), 4);
  CHECK(g.degree == 2);
  CHECK(g.generator_degrees.empty());

  // Generators at the cap cannot be certified.
  g = generation_degree(parse_sequence("0,1,3"), 3);
  CHECK(!g.degree);
}

TEST_CASE("generation degree agrees with fixed-degree equivalence") {
  for (const auto& a : normalized_family(2, 3, 7)) {
    const int cap = 6;
    const auto g = generation_degree(a, cap);
    CAPTURE(a.str());
    if (!g.degree) continue;
    for (int m = *g.degree + 1; m <= cap; ++m) CHECK(equivalence_report(a, m, *g.degree).generated);
    if (*g.degree > 2) CHECK(!equivalence_report(a, *g.degree, *g.degree - 1).generated);
  }
}

TEST_CASE("move_trace") {
  const auto ap = parse_sequence("0,1,2");
  auto tr = move_trace(mono({1, 0, 1}), mono({0, 2, 0}), ap);
  CHECK(tr.equivalent);
  REQUIRE(tr.moves.size() == 1);
  CHECK(tr.moves[0] == Move{0, 2, 1, 1});

  tr = move_trace(mono({1, 1, 1}), mono({1, 1, 1}), ap);
  CHECK(tr.equivalent);
  CHECK(tr.moves.empty());

  tr = move_trace(mono({2, 0, 1}), mono({0, 3, 0}), parse_sequence("0,1,3"));
  CHECK(!tr.equivalent);
  REQUIRE(tr.components);
  CHECK(tr.components->first != tr.components->second);

  CHECK_THROWS_AS(move_trace(mono({2, 0, 0}), mono({0, 2, 0}), ap), Error);
  CHECK_THROWS_AS(move_trace(mono({1, 0, 0}), mono({0, 2, 0}), ap), Error);
}

TEST_CASE("game connectivity equals the 2-equivalence components") {
  for (const auto& a : normalized_family(2, 3, 6)) {
    for (int m = 2; m <= 4; ++m) {
      std::map<Int, std::vector<Monomial>> classes;
      for (auto& xi : monomials_of_degree(a.size(), m)) classes[weight(xi, a)].push_back(xi);
      Int components = 0;
      for (const auto& [w, members] : classes) {
        // Count components by BFS traces from representatives.
        std::vector<bool> seen(members.size(), false);
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (seen[i]) continue;
          ++components;
          for (std::size_t j = i; j < members.size(); ++j) {
            const auto tr = move_trace(members[i], members[j], a);
            if (!tr.equivalent) continue;
            seen[j] = true;
            Monomial cur = members[i];
            for (const auto& mv : tr.moves) cur = apply_move(cur, mv, a);
            CHECK(cur == members[j]);
          }
        }
      }
      CAPTURE(a.str());
      CAPTURE(m);
      CHECK(components == equivalence_report(a, m, 2).components);
    }
  }
}

TEST_CASE("constructive strategy succeeds on progressions and agrees with search") {
  for (int n = 2; n <= 4; ++n) {
    const auto ap = scale(standard_sequence(n), 2);
    for (int m = 2; m <= 4; ++m) {
      const auto ms = monomials_of_degree(ap.size(), m);
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
          if (weight(ms[i], ap) != weight(ms[j], ap)) continue;
          const auto moves = constructive_trace(ms[i], ms[j], ap);
          REQUIRE(moves);
          Monomial cur = ms[i];
          for (const auto& mv : *moves) cur = apply_move(cur, mv, ap);
          CHECK(cur == ms[j]);
        }
    }
  }
  // Wherever the strategy returns a trace, the search must agree.
  for (const auto& a : normalized_family(2, 3, 6))
    for (const auto& xi : monomials_of_degree(a.size(), 3))
      for (const auto& eta : monomials_of_degree(a.size(), 3)) {
        if (weight(xi, a) != weight(eta, a)) continue;
        if (constructive_trace(xi, eta, a)) CHECK(move_trace(xi, eta, a).equivalent);
      }
  CHECK(!constructive_trace(mono({2, 0, 1}), mono({0, 3, 0}), parse_sequence("0,1,3")));
}

TEST_CASE("equal-weight distinct monomials have interlaced supports") {
  for (const auto& a : normalized_family(1, 4, 7))
    for (int m = 1; m <= 3; ++m) {
      const auto ms = monomials_of_degree(a.size(), m);
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
          if (weight(ms[i], a) == weight(ms[j], a)) CHECK(interlaced(support(ms[i]), support(ms[j])));
    }
}

TEST_CASE("multiplying equivalent monomials keeps them equivalent") {
  SeededRng rng(7);
  for (const auto& a : normalized_family(2, 4, 6)) {
    const auto ms = monomials_of_degree(a.size(), 2);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        if (weight(ms[i], a) != weight(ms[j], a) || !move_trace(ms[i], ms[j], a).equivalent) continue;
        Monomial lambda{std::vector<int>(a.size(), 0)};
        for (int k = 0; k < 2; ++k) ++lambda.exponents[rng.uniform(0, a.n())];
        CHECK(move_trace(multiply(lambda, ms[i]), multiply(lambda, ms[j]), a).equivalent);
      }
  }
}

TEST_CASE("component counts are symmetric under reversal") {
  for (const auto& a : normalized_family(2, 4, 7))
    for (int m = 2; m <= 4; ++m)
      CHECK(equivalence_report(a, m, 2).components == equivalence_report(reverse(a), m, 2).components);
}
