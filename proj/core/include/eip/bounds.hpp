#pragma once

#include <cstdint>
#include <vector>

#include "eip/config.hpp"

namespace eip {

// Scaling data at (ell, d): h = ell^(2^(1-d)) and c_d = 1 - 2^(1-d).
// h is kept implicit; all comparisons against it are exact integer tests
// obtained by raising both sides to the power 2^(d-1).
struct ScalingParams {
  Coord ell;
  int d;
  Card h_floor;               // floor(ell^(2^(1-d)))
  std::int64_t c_num, c_den;  // c_d as a reduced fraction

  static ScalingParams at(Coord ell, int d);
};

// floor(h_{ell,d}) via an exact integer 2^(d-1)-th root.
Card scaling_floor(Coord ell, int d);

// Exact test of 2p >= 4^{c_d} * ell^(2^(1-d)):
// both sides to the 2^(d-1) gives (2p)^(2^(d-1)) >= 4^(2^(d-1)-1) * ell.
bool meets_converse_threshold(Coord twop, Coord ell, int d);

// {1..ell-p} x {1..ell}^(d-1); explicit when it fits the materialization
// budget, box-backed otherwise.
Config slab(Coord ell, int d, Coord p);

// {1..ell-2p} x {1..ell+1}^j x {1..ell}^(d-1-j).
Config padded_slab(Coord ell, int j, int d, Coord twop);

// (d-1+2^(1-d))/d as a reduced fraction.
struct Fraction {
  std::int64_t num, den;
};
Fraction scaling_exponent(int d);

struct BoundsRow {
  int d;
  Coord ell;
  int j;  // -1 on lower-bound-family rows
  Coord p;
  Card theta_family;
  Card theta_daisy;
  bool minimizer;
};

// Sweep of the extremal slab family: every p <= floor(h_{ell,d}).
std::vector<BoundsRow> lower_bound_sweep(int d, Coord ell_min, Coord ell_max, int threads = 0);

// Sweep of the padded family over all j and every even 2p < ell at or above
// the exact threshold.
std::vector<BoundsRow> converse_sweep(int d, Coord ell_min, Coord ell_max, int threads = 0);

std::string bounds_rows_csv(const std::vector<BoundsRow>& rows);

}  // namespace eip
