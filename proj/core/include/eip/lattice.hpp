#pragma once

#include "eip/config.hpp"

namespace eip {

// b(C): number of unordered nearest-neighbor pairs in C.
Card bond_count(const Config& c);

// #Theta_d(C): number of lattice edges with exactly one endpoint in C,
// counted directly from the boundary (not derived from bond_count, so the
// identity #Theta + 2b = 2d#C stays a meaningful cross-check).
Card edge_perimeter(const Config& c);

// Slice {x in C : x_axis = level} with the axis coordinate dropped.
// axis is 1-based; requires dim >= 2.
Config section(const Config& c, int axis, Coord level);

// Smallest axis-aligned cuboid containing C. Errors on empty input.
Box minimal_rectangle(const Config& c);

// Wulff shape {1..floor(n^(1/d))}^d, box-backed; the root is exact integer
// arithmetic so perfect powers do not drift.
Config wulff(Card n, int d);

struct SymDiffResult {
  Card count = 0;
  Point shift;  // a minimizing translation a, #((C-a) sym-diff D)
};

// Minimum of #((C-a) sym-diff D) over all integer translations a, with the
// lexicographically smallest minimizing a. The search window is exactly the
// set of a for which the translated minimal rectangles intersect; outside it
// the symmetric difference equals #C + #D. Box-vs-box pairs are resolved in
// closed form.
SymDiffResult min_translate_symdiff(const Config& c, const Config& d);

}  // namespace eip
