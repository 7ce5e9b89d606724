#include "eip/lattice.hpp"

#include <algorithm>

namespace eip {

namespace {

Card box_bonds(const Box& b) {
  Card total = 0;
  for (int i = 0; i < b.dim(); ++i) {
    Card term = b.extent(i) - 1;
    for (int j = 0; j < b.dim(); ++j)
      if (j != i) term *= b.extent(j);
    total += term;
  }
  return total;
}

Card box_perimeter(const Box& b) {
  Card total = 0;
  for (int i = 0; i < b.dim(); ++i) {
    Card face = 1;
    for (int j = 0; j < b.dim(); ++j)
      if (j != i) face *= b.extent(j);
    total += 2 * face;
  }
  return total;
}

}  // namespace

Card bond_count(const Config& c) {
  if (c.is_box()) return box_bonds(c.box());
  if (c.empty_set()) return 0;
  Membership in(c);
  Card bonds = 0;
  for (const Point& p : c.points())
    for (int axis = 0; axis < c.dim(); ++axis)
      if (in.contains(p.shifted(axis, 1))) ++bonds;
  return bonds;
}

Card edge_perimeter(const Config& c) {
  if (c.is_box()) return box_perimeter(c.box());
  if (c.empty_set()) return 0;
  Membership in(c);
  Card boundary = 0;
  for (const Point& p : c.points())
    for (int axis = 0; axis < c.dim(); ++axis) {
      if (!in.contains(p.shifted(axis, 1))) ++boundary;
      if (!in.contains(p.shifted(axis, -1))) ++boundary;
    }
  return boundary;
}

Config section(const Config& c, int axis, Coord level) {
  if (c.dim() < 2) throw ValidationError("section requires dimension >= 2");
  if (axis < 1 || axis > c.dim()) throw ValidationError("section axis out of range");
  const int ax = axis - 1;
  if (c.is_box()) {
    const Box& b = c.box();
    if (level < b.lo(ax) || level > b.hi(ax)) return Config::empty(c.dim() - 1);
    std::vector<Coord> origin, extents;
    for (int i = 0; i < c.dim(); ++i) {
      if (i == ax) continue;
      origin.push_back(b.origin()[i]);
      extents.push_back(b.extent(i));
    }
    return Config::from_box(Box(Point(std::span<const Coord>(origin)), extents));
  }
  std::vector<Point> out;
  for (const Point& p : c.points()) {
    if (p[ax] != level) continue;
    std::vector<Coord> q;
    q.reserve(static_cast<std::size_t>(c.dim() - 1));
    for (int i = 0; i < c.dim(); ++i)
      if (i != ax) q.push_back(p[i]);
    out.emplace_back(std::span<const Coord>(q));
  }
  return Config::from_points(c.dim() - 1, std::move(out));
}

Box minimal_rectangle(const Config& c) {
  if (c.empty_set()) throw ValidationError("empty configuration");
  if (c.is_box()) return c.box();
  Point lo = c.points().front(), hi = c.points().front();
  for (const Point& p : c.points())
    for (int i = 0; i < c.dim(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  Point origin = Point::zero(c.dim());
  std::vector<Coord> extents(static_cast<std::size_t>(c.dim()));
  for (int i = 0; i < c.dim(); ++i) {
    origin[i] = lo[i] - 1;
    extents[static_cast<std::size_t>(i)] = hi[i] - lo[i] + 1;
  }
  return Box(origin, extents);
}

Config wulff(Card n, int d) {
  check_dim(d);
  if (n < 1) throw ValidationError("wulff requires n >= 1");
  Coord m = static_cast<Coord>(int_nth_root(n, d));
  return Config::from_box(Box(Point::zero(d), std::vector<Coord>(static_cast<std::size_t>(d), m)));
}

namespace {

SymDiffResult symdiff_boxes(const Box& cb, const Box& db) {
  const int d = cb.dim();
  Point shift = Point::zero(d);
  Card overlap = 1;
  for (int i = 0; i < d; ++i) {
    // smallest a_i for which the per-axis overlap of (C - a) with D is
    // min(extC, extD): nest the shorter interval flush at the far end.
    Coord a = cb.extent(i) <= db.extent(i) ? cb.hi(i) - db.hi(i) : cb.lo(i) - db.lo(i);
    shift[i] = a;
    overlap *= std::min(cb.extent(i), db.extent(i));
  }
  return {cb.cells() + db.cells() - 2 * overlap, shift};
}

}  // namespace

SymDiffResult min_translate_symdiff(const Config& c, const Config& d) {
  if (c.dim() != d.dim()) throw ValidationError("dimension mismatch in symmetric difference");
  if (c.empty_set() || d.empty_set())
    throw ValidationError("min_translate_symdiff requires nonempty configurations");
  if (c.is_box() && d.is_box()) return symdiff_boxes(c.box(), d.box());

  Config ce = c.materialized();
  Config de = d.materialized();
  Box cb = minimal_rectangle(ce), db = minimal_rectangle(de);
  Membership din(de);
  const int dim = c.dim();

  Point a = Point::zero(dim), lo = Point::zero(dim), hi = Point::zero(dim);
  for (int i = 0; i < dim; ++i) {
    lo[i] = cb.lo(i) - db.hi(i);
    hi[i] = cb.hi(i) - db.lo(i);
    a[i] = lo[i];
  }

  const Card total = ce.size() + de.size();
  SymDiffResult best{kCardMax, a};
  for (;;) {
    Card inter = 0;
    for (const Point& p : ce.points())
      if (din.contains(p.minus(a))) ++inter;
    Card count = total - 2 * inter;
    if (count < best.count) best = {count, a};  // lex order scan: first hit wins ties
    int axis = dim - 1;
    while (axis >= 0) {
      if (a[axis] < hi[axis]) {
        ++a[axis];
        for (int j = axis + 1; j < dim; ++j) a[j] = lo[j];
        break;
      }
      --axis;
    }
    if (axis < 0) break;
  }
  return best;
}

}  // namespace eip
