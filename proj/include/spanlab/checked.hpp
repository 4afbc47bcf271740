#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "spanlab/error.hpp"

namespace spanlab {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "addition overflows int64");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplication overflows int64");
  return r;
}

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

}  // namespace spanlab
