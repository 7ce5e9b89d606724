#include "eip/rearrange.hpp"

#include <algorithm>
#include <map>

#include "eip/daisy.hpp"
#include "eip/lattice.hpp"

namespace eip {

Config decreasing_rearrangement(const Config& c, int axis) {
  if (c.dim() < 2) throw ValidationError("decreasing_rearrangement requires dimension >= 2");
  if (axis < 1 || axis > c.dim()) throw ValidationError("rearrangement axis out of range");
  if (c.empty_set()) throw ValidationError("decreasing_rearrangement requires a nonempty configuration");
  const Config e = c.materialized();
  const int ax = axis - 1;

  std::map<Coord, Card> level_sizes;
  for (const Point& p : e.points()) ++level_sizes[p[ax]];
  std::vector<Card> sizes;
  sizes.reserve(level_sizes.size());
  for (const auto& [level, n] : level_sizes) sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());

  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(e.size()));
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    Config slice = materialize(daisy_of_cardinality(sizes[k], c.dim() - 1));
    for (const Point& q : slice.points()) {
      Point p = Point::zero(c.dim());
      p[ax] = static_cast<Coord>(k + 1);
      for (int i = 0, j = 0; i < c.dim(); ++i)
        if (i != ax) p[i] = q[j++];
      out.push_back(p);
    }
  }
  return Config::from_points(c.dim(), std::move(out));
}

bool sections_are_minimizers(const Config& c) {
  if (c.dim() < 2) throw ValidationError("sections_are_minimizers requires dimension >= 2");
  if (c.empty_set()) return true;
  const Config e = c.materialized();
  for (int axis = 1; axis <= e.dim(); ++axis) {
    Box r = minimal_rectangle(e);
    for (Coord level = r.lo(axis - 1); level <= r.hi(axis - 1); ++level) {
      Config s = section(e, axis, level);
      if (!s.empty_set() && !is_minimizer(s)) return false;
    }
  }
  return true;
}

}  // namespace eip
