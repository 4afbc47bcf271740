#include "spanlab/series.hpp"

#include <sstream>

namespace spanlab {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

TruncatedSeries::TruncatedSeries(int truncation) {
  if (truncation < 1) throw Error(ErrorCode::PreconditionViolated, "truncation must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(truncation), Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int truncation)
    : TruncatedSeries(truncation) {
  for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) coeffs_[i] = coefficients[i];
}

TruncatedSeries TruncatedSeries::monomial(int k, int truncation, const Rational& c) {
  TruncatedSeries s(truncation);
  if (k >= 0 && k < truncation) s.coeffs_[k] = c;
  return s;
}

std::optional<int> TruncatedSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::with_truncation(int truncation) const {
  return TruncatedSeries(coeffs_, truncation);
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    os << (first ? "" : " + ") << coeffs_[i].get_str();
    if (i > 0) os << "*t^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << coeffs_.size() << ")";
  return os.str();
}

namespace {

void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation() != b.truncation())
    throw Error(ErrorCode::TruncationMismatch, "series truncated at " + std::to_string(a.truncation()) +
                                                   " and " + std::to_string(b.truncation()));
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_truncation(a, b);
  TruncatedSeries out = a;
  for (int i = 0; i < out.truncation(); ++i) out[i] += b[i];
  return out;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_truncation(a, b);
  const int n = a.truncation();
  TruncatedSeries out(n);
  // Skip zero coefficients of the sparser-looking operand; sections are sparse.
  for (int j = 0; j < n; ++j) {
    if (sgn(b[j]) == 0) continue;
    for (int i = 0; i + j < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries scalar_multiply(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (int i = 0; i < out.truncation(); ++i) out[i] *= c;
  return out;
}

RowReducer::RowReducer(std::size_t columns, bool track_combinations)
    : columns_(columns), track_(track_combinations) {}

bool RowReducer::insert(std::vector<Rational> row) {
  if (row.size() != columns_) throw Error(ErrorCode::LengthMismatch, "row length differs from column count");
  std::vector<Rational> comb;
  if (track_) {
    comb.assign(inserted_ + 1, Rational(0));
    comb[inserted_] = 1;
  }
  ++inserted_;
  for (const Pivot& p : pivots_) {
    if (sgn(row[p.column]) == 0) continue;
    const Rational f = row[p.column];
    for (std::size_t c = p.column; c < columns_; ++c)
      if (sgn(p.row[c]) != 0) row[c] -= f * p.row[c];
    if (track_)
      for (std::size_t k = 0; k < p.combination.size(); ++k)
        if (sgn(p.combination[k]) != 0) comb[k] -= f * p.combination[k];
  }
  std::size_t lead = 0;
  while (lead < columns_ && sgn(row[lead]) == 0) ++lead;
  if (lead == columns_) {
    if (track_) dependencies_.push_back(std::move(comb));
    return false;
  }
  const Rational inv = 1 / row[lead];
  for (std::size_t c = lead; c < columns_; ++c) row[c] *= inv;
  if (track_)
    for (Rational& x : comb) x *= inv;
  pivots_.push_back({lead, std::move(row), std::move(comb)});
  return true;
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  RowReducer r(rows.front().size());
  for (const auto& row : rows) r.insert(row);
  return r.rank();
}

}  // namespace spanlab
