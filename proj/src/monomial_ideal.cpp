#include "spanlab/monomial_ideal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "spanlab/union_find.hpp"

namespace spanlab {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string Monomial::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
  return os.str();
}

Monomial parse_monomial(std::string_view text) {
  Monomial out;
  for (Int v : parse_int_list(text)) {
    if (v < 0) throw Error(ErrorCode::PreconditionViolated, "exponents must be non-negative");
    out.exponents.push_back(static_cast<int>(v));
  }
  return out;
}

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.variables() != b.variables())
    throw Error(ErrorCode::LengthMismatch, "monomials live in different numbers of variables");
}

}  // namespace

Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

Monomial common_factor(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] = std::min(a.exponents[i], b.exponents[i]);
  return out;
}

Int weight(const Monomial& xi, const VanishingSequence& a) {
  if (xi.variables() != a.size())
    throw Error(ErrorCode::LengthMismatch, "monomial has " + std::to_string(xi.variables()) +
                                               " exponents, sequence has " + std::to_string(a.size()) +
                                               " entries");
  Int w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w = checked_add(w, checked_mul(a[i], xi.exponents[i]));
  return w;
}

std::vector<int> support(const Monomial& xi) {
  std::vector<int> out;
  for (std::size_t i = 0; i < xi.exponents.size(); ++i)
    if (xi.exponents[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

// Some element of `outer` lies strictly below and some strictly above an element of `inner`.
bool brackets(std::span<const int> outer, std::span<const int> inner) {
  if (outer.empty()) return false;
  const auto [lo, hi] = std::minmax_element(outer.begin(), outer.end());
  return std::any_of(inner.begin(), inner.end(), [&](int q) { return *lo < q && q < *hi; });
}

}  // namespace

bool interlaced(std::span<const int> u, std::span<const int> v) { return brackets(u, v) || brackets(v, u); }

std::vector<Monomial> monomials_of_degree(std::size_t variables, int m) {
  std::vector<Monomial> out;
  if (variables == 0 || m < 0) return out;
  Monomial cur{std::vector<int>(variables, 0)};
  // Fill positions left to right, largest exponent first.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == variables) {
      cur.exponents[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur.exponents[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    cur.exponents[pos] = 0;
  };
  rec(rec, 0, m);
  return out;
}

Int BigradedDims::dim_J_at(Int j) const {
  auto it = per_weight.find(j);
  return it == per_weight.end() ? 0 : std::max<Int>(0, it->second - 1);
}

BigradedDims bigraded_dims(const VanishingSequence& a, int m) {
  if (m < 0) throw Error(ErrorCode::PreconditionViolated, "degree must be >= 0");
  BigradedDims out{m, {}, 0, 0};
  for (const Monomial& xi : monomials_of_degree(a.size(), m)) ++out.per_weight[weight(xi, a)];
  for (const auto& [w, count] : out.per_weight) out.dim_J += count - 1;
  out.dim_S = static_cast<Int>(out.per_weight.size());
  return out;
}

int differing_coordinates(const Monomial& xi, const Monomial& eta) {
  require_same_length(xi, eta);
  int count = 0;
  for (std::size_t i = 0; i < xi.exponents.size(); ++i) count += xi.exponents[i] != eta.exponents[i];
  return count;
}

bool are_t_neighbors(const Monomial& xi, const Monomial& eta, const VanishingSequence& a, int t) {
  if (xi == eta || xi.degree() != eta.degree() || weight(xi, a) != weight(eta, a)) return false;
  return xi.degree() - common_factor(xi, eta).degree() <= t;
}

std::vector<Monomial> t_neighbors(const Monomial& xi, const VanishingSequence& a, int t, int m) {
  if (xi.degree() != m) throw Error(ErrorCode::PreconditionViolated, "monomial degree differs from m");
  const Int w = weight(xi, a);
  std::vector<Monomial> out;
  for (const Monomial& eta : monomials_of_degree(a.size(), m))
    if (weight(eta, a) == w && are_t_neighbors(xi, eta, a, t)) out.push_back(eta);
  return out;
}

namespace {

struct WeightClass {
  Int weight;
  std::vector<Monomial> members;  // descending lexicographic order
};

std::vector<WeightClass> weight_classes(const VanishingSequence& a, int m) {
  std::map<Int, std::vector<Monomial>> by_weight;
  for (Monomial& xi : monomials_of_degree(a.size(), m)) {
    const Int w = weight(xi, a);
    by_weight[w].push_back(std::move(xi));
  }
  std::vector<WeightClass> out;
  out.reserve(by_weight.size());
  for (auto& [w, members] : by_weight) out.push_back({w, std::move(members)});
  return out;
}

// Component label per member; labels numbered in order of first appearance.
std::vector<int> component_labels(const std::vector<Monomial>& members, int t) {
  const std::size_t k = members.size();
  UnionFind uf(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Monomial& x = members[i];
      const Monomial& y = members[j];
      if (x.degree() - common_factor(x, y).degree() <= t) uf.unite(i, j);
    }
  std::vector<int> labels(k);
  std::map<std::size_t, int> root_label;
  for (std::size_t i = 0; i < k; ++i) {
    auto [it, inserted] = root_label.try_emplace(uf.find(i), static_cast<int>(root_label.size()));
    labels[i] = it->second;
  }
  return labels;
}

EquivalenceReport equivalence_report_unchecked(const VanishingSequence& a, int m, int t) {
  EquivalenceReport out{m, t, 0, 0, true, std::nullopt};
  for (const WeightClass& cls : weight_classes(a, m)) {
    ++out.classes_by_weight;
    const std::vector<int> labels = component_labels(cls.members, t);
    const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    out.components += count;
    if (count > 1 && !out.witness) {
      auto other = std::find_if(labels.begin(), labels.end(), [&](int l) { return l != labels[0]; });
      out.witness = std::make_pair(cls.members[0], cls.members[other - labels.begin()]);
    }
  }
  out.generated = out.components == out.classes_by_weight;
  return out;
}

}  // namespace

EquivalenceReport equivalence_report(const VanishingSequence& a, int m, int t) {
  if (t < 2 || m < t) throw Error(ErrorCode::PreconditionViolated, "requires m >= t >= 2");
  return equivalence_report_unchecked(a, m, t);
}

GenerationDegree generation_degree(const VanishingSequence& a, int m_cap, int floor) {
  if (floor < 2 || m_cap < floor) throw Error(ErrorCode::PreconditionViolated, "requires m_cap >= floor >= 2");
  GenerationDegree out{std::nullopt, {}, m_cap};
  for (int m = 2; m <= m_cap; ++m)
    if (!equivalence_report_unchecked(a, m, m - 1).generated) out.generator_degrees.push_back(m);
  const int last = out.generator_degrees.empty() ? floor : std::max(floor, out.generator_degrees.back());
  if (last < m_cap) out.degree = last;
  return out;
}

Move inverse(const Move& mv) { return {mv.to_i, mv.to_j, mv.from_i, mv.from_j}; }

Monomial apply_move(const Monomial& xi, const Move& mv, const VanishingSequence& a) {
  const int n = a.n();
  auto in_range = [n](int i) { return 0 <= i && i <= n; };
  if (xi.variables() != a.size()) throw Error(ErrorCode::LengthMismatch, "monomial/sequence length mismatch");
  if (!in_range(mv.from_i) || !in_range(mv.from_j) || !in_range(mv.to_i) || !in_range(mv.to_j))
    throw Error(ErrorCode::PreconditionViolated, "move leaves the board");
  if (a[mv.from_i] + a[mv.from_j] != a[mv.to_i] + a[mv.to_j])
    throw Error(ErrorCode::PreconditionViolated, "move changes the weight");
  Monomial out = xi;
  --out.exponents[mv.from_i];
  --out.exponents[mv.from_j];
  if (out.exponents[mv.from_i] < 0 || out.exponents[mv.from_j] < 0)
    throw Error(ErrorCode::PreconditionViolated, "no piece to move");
  ++out.exponents[mv.to_i];
  ++out.exponents[mv.to_j];
  return out;
}

namespace {

std::map<Int, std::vector<std::pair<int, int>>> pairs_by_sum(const VanishingSequence& a) {
  std::map<Int, std::vector<std::pair<int, int>>> out;
  for (int i = 0; i <= a.n(); ++i)
    for (int j = i; j <= a.n(); ++j) out[a[i] + a[j]].emplace_back(i, j);
  return out;
}

}  // namespace

MoveTrace move_trace(const Monomial& xi, const Monomial& eta, const VanishingSequence& a) {
  if (xi.degree() != eta.degree() || weight(xi, a) != weight(eta, a))
    throw Error(ErrorCode::PreconditionViolated, "positions must have equal degree and weight");
  if (xi == eta) return {true, {}, std::nullopt};

  const auto sums = pairs_by_sum(a);
  std::map<Monomial, std::pair<Monomial, Move>> parent;
  std::deque<Monomial> queue{xi};
  parent.emplace(xi, std::make_pair(xi, Move{0, 0, 0, 0}));
  bool found = false;
  while (!queue.empty() && !found) {
    const Monomial cur = queue.front();
    queue.pop_front();
    for (int i = 0; i <= a.n() && !found; ++i) {
      for (int j = i; j <= a.n() && !found; ++j) {
        if (cur.exponents[i] == 0 || cur.exponents[j] == 0 || (i == j && cur.exponents[i] < 2)) continue;
        for (const auto& [ti, tj] : sums.at(a[i] + a[j])) {
          if (ti == i && tj == j) continue;
          const Move mv{i, j, ti, tj};
          Monomial next = apply_move(cur, mv, a);
          if (parent.contains(next)) continue;
          parent.emplace(next, std::make_pair(cur, mv));
          if (next == eta) {
            found = true;
            break;
          }
          queue.push_back(std::move(next));
        }
      }
    }
  }

  if (found) {
    std::vector<Move> moves;
    for (Monomial cur = eta; cur != xi;) {
      const auto& [prev, mv] = parent.at(cur);
      moves.push_back(mv);
      cur = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return {true, std::move(moves), std::nullopt};
  }

  const Int w = weight(xi, a);
  std::vector<Monomial> members;
  for (Monomial& zeta : monomials_of_degree(a.size(), xi.degree()))
    if (weight(zeta, a) == w) members.push_back(std::move(zeta));
  const std::vector<int> labels = component_labels(members, 2);
  auto label_of = [&](const Monomial& z) {
    return labels[std::find(members.begin(), members.end(), z) - members.begin()];
  };
  return {false, {}, std::make_pair(label_of(xi), label_of(eta))};
}

namespace {

bool progression_on(const VanishingSequence& a, int lo, int hi) {
  for (int i = lo + 2; i <= hi; ++i)
    if (a[i] - a[i - 1] != a[lo + 1] - a[lo]) return false;
  return true;
}

// Innermost pair p' < q < p'' with p', p'' in `outer`, q in `inner`, and an
// arithmetic progression on [p', p''].
std::optional<std::pair<int, int>> walkable_pair(const std::vector<int>& outer, const std::vector<int>& inner,
                                                 const VanishingSequence& a) {
  std::optional<std::pair<int, int>> best;
  for (int q : inner) {
    for (int lo : outer) {
      if (lo >= q) continue;
      for (int hi : outer) {
        if (hi <= q || !progression_on(a, lo, hi)) continue;
        if (!best || hi - lo < best->second - best->first) best = std::make_pair(lo, hi);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<std::vector<Move>> constructive_trace(const Monomial& xi, const Monomial& eta,
                                                    const VanishingSequence& a) {
  if (xi.degree() != eta.degree() || weight(xi, a) != weight(eta, a))
    throw Error(ErrorCode::PreconditionViolated, "positions must have equal degree and weight");
  Monomial x = xi;
  Monomial y = eta;
  std::vector<Move> forward;
  std::vector<Move> backward;
  const int step_limit = 64 * (xi.degree() + 1) * static_cast<int>(a.size());
  for (int step = 0; x != y; ++step) {
    if (step > step_limit) return std::nullopt;
    const Monomial c = common_factor(x, y);
    Monomial xr = x;
    Monomial yr = y;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
      xr.exponents[i] -= c.exponents[i];
      yr.exponents[i] -= c.exponents[i];
    }
    const std::vector<int> u = support(xr);
    const std::vector<int> v = support(yr);
    if (auto pr = walkable_pair(u, v, a)) {
      const Move mv{pr->first, pr->second, pr->first + 1, pr->second - 1};
      x = apply_move(x, mv, a);
      forward.push_back(mv);
    } else if (auto pr2 = walkable_pair(v, u, a)) {
      const Move mv{pr2->first, pr2->second, pr2->first + 1, pr2->second - 1};
      y = apply_move(y, mv, a);
      backward.push_back(mv);
    } else {
      return std::nullopt;
    }
  }
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) forward.push_back(inverse(*it));
  return forward;
}

}  // namespace spanlab
