#pragma once

#include "eip/config.hpp"

namespace eip {

enum class Ordering { Less, Equal, Greater };

// The recursive total order on N^d behind the nested special solutions.
// Points must have all coordinates >= 1 and equal dimension.
//
// x precedes y when max x < max y; at equal maxima the tuples with
// sub-maximal entries flattened to 1 are compared right-to-left
// lexicographically; when those agree and the maximum exceeds 2, the
// comparison recurses on the tuples with all maximal entries dropped.
// In dimension one this is the usual <.
Ordering order_compare(const Point& x, const Point& y);

inline bool order_less(const Point& x, const Point& y) {
  return order_compare(x, y) == Ordering::Less;
}

// The n smallest points of N^d: candidates are enumerated in the cube
// {1..m}^d for the least m with m^d >= n, sorted, and truncated.
Config initial_segment(Card n, int d);

}  // namespace eip
