#include "spanlab/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace spanlab {

VanishingSequence VanishingSequence::validate(std::vector<Int> raw) {
  if (raw.size() < 2) throw Error(ErrorCode::TooShort, "a vanishing sequence needs at least two entries");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) throw Error(ErrorCode::NegativeEntry, "entry " + std::to_string(i) + " is negative");
    if (i > 0 && raw[i] <= raw[i - 1])
      throw Error(ErrorCode::NotStrictlyIncreasing,
                  "entry " + std::to_string(i) + " does not exceed its predecessor");
  }
  return VanishingSequence(std::move(raw));
}

std::string VanishingSequence::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  return os.str();
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(tok) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

VanishingSequence parse_sequence(std::string_view text) {
  return VanishingSequence::validate(parse_int_list(text));
}

VanishingSequence translate(const VanishingSequence& a, Int shift) {
  std::vector<Int> b;
  b.reserve(a.size());
  for (Int v : a.entries()) b.push_back(checked_add(v, shift));
  return VanishingSequence::validate(std::move(b));
}

VanishingSequence scale(const VanishingSequence& a, Int factor) {
  if (factor < 1) throw Error(ErrorCode::NonPositiveFactor, "scale factor must be >= 1");
  std::vector<Int> b;
  b.reserve(a.size());
  for (Int v : a.entries()) b.push_back(checked_mul(v, factor));
  return VanishingSequence::validate(std::move(b));
}

VanishingSequence reverse(const VanishingSequence& a) {
  std::vector<Int> b(a.size());
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) b[i] = a.back() - a[n - i];
  return VanishingSequence::validate(std::move(b));
}

Normalized normalize(const VanishingSequence& a) {
  const Int shift = a.front();
  std::vector<Int> b(a.entries().begin(), a.entries().end());
  for (Int& v : b) v -= shift;
  const Int factor = gcd_of(b);
  for (Int& v : b) v /= factor;
  return {VanishingSequence::validate(std::move(b)), shift, factor};
}

Int inflection_weight(const VanishingSequence& a) {
  Int w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w = checked_add(w, a[i] - static_cast<Int>(i));
  return w;
}

bool is_normalized(const VanishingSequence& a) {
  return a.front() == 0 && gcd_of(a.entries()) == 1;
}

VanishingSequence elliptic_flex_sequence(int n) {
  std::vector<Int> v(n + 1);
  for (int i = 0; i < n; ++i) v[i] = i;
  v[n] = n + 1;
  return VanishingSequence::validate(std::move(v));
}

VanishingSequence standard_sequence(int n) {
  std::vector<Int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return VanishingSequence::validate(std::move(v));
}

namespace {

void extend(std::vector<Int>& prefix, std::size_t length, Int max_entry,
            std::vector<VanishingSequence>& out) {
  if (prefix.size() == length) {
    if (gcd_of(prefix) == 1) out.push_back(VanishingSequence::validate(prefix));
    return;
  }
  for (Int v = prefix.back() + 1; v <= max_entry; ++v) {
    prefix.push_back(v);
    extend(prefix, length, max_entry, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<VanishingSequence> normalized_family(int n_lo, int n_hi, Int max_entry) {
  std::vector<VanishingSequence> out;
  for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
    std::vector<Int> prefix{0};
    extend(prefix, static_cast<std::size_t>(n) + 1, max_entry, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spanlab
