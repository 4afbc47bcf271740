#include "spanlab/bounds.hpp"

namespace spanlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

BigInt big(Int v) { return BigInt(static_cast<long>(v)); }

}  // namespace

BigInt binomial(unsigned long top, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), top, k);
  return r;
}

BigInt max_hypersurfaces(Int n, Int m) {
  require(n >= 1 && m >= 2, "requires n >= 1 and m >= 2");
  return binomial(static_cast<unsigned long>(m + n), static_cast<unsigned long>(n)) - big(m) * big(n) - 1;
}

BigInt next_hypersurface_bound(Int n, Int m) {
  require(n >= 2 && m >= 2, "requires n >= 2 and m >= 2");
  return binomial(static_cast<unsigned long>(m + n), static_cast<unsigned long>(n)) - big(m) * (big(n) + 1);
}

BigInt quadric_bound(Int c) {
  require(c >= 1, "requires c >= 1");
  return big(c) * (big(c) + 1) / 2;
}

BigInt pluecker_budget(Int n, Int d, Int g) {
  require(n >= 1 && d >= 1 && g >= 0, "requires n >= 1, d >= 1, g >= 0");
  return (big(n) + 1) * big(d) + big(n) * (big(n) + 1) * (big(g) - 1);
}

bool check_weight_budget(Int n, Int d, Int g, std::span<const Int> weights) {
  BigInt total = 0;
  for (Int w : weights) {
    require(w >= 1, "point weights must be >= 1");
    total += big(w);
  }
  return total == pluecker_budget(n, d, g);
}

std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace spanlab
