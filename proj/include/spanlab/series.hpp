#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "spanlab/error.hpp"

namespace spanlab {

using Rational = mpq_class;

/// Parses "p/q" or "p". Throws ParseError.
Rational parse_rational(const std::string& text);

/// Element of k[[t]] / (t^N) with exact rational coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int truncation);
  TruncatedSeries(std::vector<Rational> coefficients, int truncation);

  /// t^k modulo t^N.
  static TruncatedSeries monomial(int k, int truncation, const Rational& c = 1);

  int truncation() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[i]; }
  Rational& operator[](int i) { return coeffs_[i]; }

  /// Least index with a nonzero coefficient; nullopt for the zero series
  /// (order >= N).
  std::optional<int> order() const;
  bool is_zero() const { return !order(); }

  /// Same coefficients, truncation changed (padding with zeros or cutting).
  TruncatedSeries with_truncation(int truncation) const;

  std::string str() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Ring operations modulo t^N; operands must share N (TruncationMismatch).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scalar_multiply(const Rational& c, const TruncatedSeries& a);

/// Incremental row echelon form over the rationals. Each inserted row is
/// reduced against the stored pivots; rows that reduce to zero are recorded
/// as dependencies when tracking is enabled.
class RowReducer {
 public:
  /// With track_combinations, every stored row remembers the combination of
  /// inserted rows it equals, so dependencies can be returned.
  explicit RowReducer(std::size_t columns, bool track_combinations = false);

  /// Returns true when the row was independent of everything inserted so far.
  bool insert(std::vector<Rational> row);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }
  std::size_t columns() const noexcept { return columns_; }

  /// Coefficient vectors (over inserted rows) of every dependency found, i.e.
  /// a basis of the left kernel of the inserted matrix.
  const std::vector<std::vector<Rational>>& dependencies() const noexcept { return dependencies_; }

 private:
  struct Pivot {
    std::size_t column;
    std::vector<Rational> row;          // pivot entry normalized to 1
    std::vector<Rational> combination;  // in terms of inserted rows
  };

  std::size_t columns_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Pivot> pivots_;
  std::vector<std::vector<Rational>> dependencies_;
};

std::size_t rank_of(const std::vector<std::vector<Rational>>& rows);

}  // namespace spanlab
