#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spanlab/checked.hpp"

namespace spanlab {

/// Strictly increasing tuple 0 <= a_0 < a_1 < ... < a_n with n >= 1.
///
/// Instances are only created through validate() or the transforms below, so
/// every live object satisfies the invariants. Entries are int64; the
/// transforms use overflow-checked arithmetic and throw ErrorCode::Overflow
/// instead of wrapping.
class VanishingSequence {
 public:
  /// Throws NotStrictlyIncreasing, NegativeEntry or TooShort.
  static VanishingSequence validate(std::vector<Int> raw);

  std::span<const Int> entries() const noexcept { return entries_; }
  Int operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// The "n" of the tuple: size() - 1.
  int n() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  Int front() const { return entries_.front(); }
  Int back() const { return entries_.back(); }

  std::string str() const;

  friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
  friend auto operator<=>(const VanishingSequence&, const VanishingSequence&) = default;

 private:
  explicit VanishingSequence(std::vector<Int> entries) : entries_(std::move(entries)) {}
  std::vector<Int> entries_;
};

/// Parses the comma-separated form "a0,a1,...,an".
VanishingSequence parse_sequence(std::string_view text);

/// Comma-separated list of integers (no sequence invariants).
std::vector<Int> parse_int_list(std::string_view text);

VanishingSequence translate(const VanishingSequence& a, Int shift);
VanishingSequence scale(const VanishingSequence& a, Int factor);
/// b_i = a_n - a_{n-i}.
VanishingSequence reverse(const VanishingSequence& a);

struct Normalized {
  VanishingSequence sequence;
  Int shift;
  Int factor;
};

/// b_0 = 0 and gcd(b) = 1, with a = translate(scale(b, factor), shift).
Normalized normalize(const VanishingSequence& a);

/// Sum over i of (a_i - i).
Int inflection_weight(const VanishingSequence& a);

bool is_normalized(const VanishingSequence& a);

/// (0, 1, ..., n-1, n+1).
VanishingSequence elliptic_flex_sequence(int n);
/// (0, 1, ..., n).
VanishingSequence standard_sequence(int n);

/// Every normalized sequence with n in [n_lo, n_hi] and a_n <= max_entry, in
/// lexicographic order.
std::vector<VanishingSequence> normalized_family(int n_lo, int n_hi, Int max_entry);

}  // namespace spanlab
