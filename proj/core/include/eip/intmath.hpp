#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "eip/errors.hpp"

namespace eip {

// Cardinalities and closed-form edge counts. Layer products at d=5,
// ell=10^4 overflow 64 bits, so counting is done in 128 bits throughout.
using Card = __int128;

constexpr Card kCardMax = (~(unsigned __int128){0}) >> 1;

std::string card_to_string(Card v);
Card card_from_string(const std::string& s);

// base^exp, saturating at kCardMax. exp >= 0.
constexpr Card ipow_sat(Card base, int exp) {
  Card r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kCardMax / base) return kCardMax;
    r *= base;
  }
  return r;
}

// floor(x^(1/n)) for x >= 0, n >= 1, in exact integer arithmetic.
constexpr Card int_nth_root(Card x, int n) {
  if (x < 0) throw ValidationError("int_nth_root: negative radicand");
  if (n < 1) throw ValidationError("int_nth_root: order must be >= 1");
  if (n == 1 || x < 2) return x;
  Card lo = 1, hi = 2;
  while (ipow_sat(hi, n) <= x) hi *= 2;
  // invariant: lo^n <= x < hi^n
  while (hi - lo > 1) {
    Card mid = lo + (hi - lo) / 2;
    if (ipow_sat(mid, n) <= x) lo = mid; else hi = mid;
  }
  return lo;
}

inline std::int64_t card_to_i64(Card v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw ValidationError(std::string(what) + ": value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

}  // namespace eip
