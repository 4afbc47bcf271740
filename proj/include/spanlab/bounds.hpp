#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

#include "spanlab/checked.hpp"

namespace spanlab {

using BigInt = mpz_class;

BigInt binomial(unsigned long top, unsigned long k);

/// C(m+n, n) - m*n - 1: most independent degree-m hypersurfaces through a
/// non-degenerate curve in P^n. Requires n >= 1, m >= 2.
BigInt max_hypersurfaces(Int n, Int m);

/// C(m+n, n) - m*(n+1): the bound once rational normal curves are excluded.
/// Requires n >= 2, m >= 2.
BigInt next_hypersurface_bound(Int n, Int m);

/// c(c+1)/2 quadrics for a curve of codimension c >= 1.
BigInt quadric_bound(Int c);

/// Total inflection weight (n+1)d + n(n+1)(g-1) of a degree-d linear system
/// of dimension n+1 on a genus-g curve.
BigInt pluecker_budget(Int n, Int d, Int g);

/// Whether the listed point weights (each >= 1) exhaust the budget exactly.
bool check_weight_budget(Int n, Int d, Int g, std::span<const Int> weights);

/// Fits in int64 -> number, otherwise decimal string; used for JSON output.
std::string to_decimal(const BigInt& v);

}  // namespace spanlab
