#include "eip/order.hpp"

#include <algorithm>

namespace eip {

namespace {

void require_natural(const Point& p) {
  for (int i = 0; i < p.dim(); ++i)
    if (p[i] < 1) throw ValidationError("order keys need all coordinates >= 1, got " + p.str());
}

// Scratch-buffer comparison core; a and b hold the surviving entries.
Ordering compare_impl(std::array<Coord, kMaxDim>& a, std::array<Coord, kMaxDim>& b, int len) {
  while (true) {
    if (len == 1) {
      if (a[0] != b[0]) return a[0] < b[0] ? Ordering::Less : Ordering::Greater;
      return Ordering::Equal;
    }
    Coord ma = a[0], mb = b[0];
    for (int i = 1; i < len; ++i) {
      ma = std::max(ma, a[static_cast<std::size_t>(i)]);
      mb = std::max(mb, b[static_cast<std::size_t>(i)]);
    }
    if (ma != mb) return ma < mb ? Ordering::Less : Ordering::Greater;

    // right-to-left lexicographic comparison of the flattened tuples
    for (int i = len - 1; i >= 0; --i) {
      Coord fa = a[static_cast<std::size_t>(i)] == ma ? ma : 1;
      Coord fb = b[static_cast<std::size_t>(i)] == ma ? ma : 1;
      if (fa != fb) return fa < fb ? Ordering::Less : Ordering::Greater;
    }

    // flattened tuples agree: maxima sit at identical positions
    bool equal = true;
    for (int i = 0; i < len; ++i)
      if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
        equal = false;
        break;
      }
    if (equal) return Ordering::Equal;

    // Totality trap: distinct tuples with equal flattening force max > 2,
    // since at max <= 2 flattening is the identity.
    invariant(ma > 2, "order comparison reached an impossible max<=2 branch");

    int w = 0;
    for (int i = 0; i < len; ++i) {
      if (a[static_cast<std::size_t>(i)] == ma) continue;
      a[static_cast<std::size_t>(w)] = a[static_cast<std::size_t>(i)];
      b[static_cast<std::size_t>(w)] = b[static_cast<std::size_t>(i)];
      ++w;
    }
    invariant(w >= 1, "dropping maxima emptied an unequal tuple");
    len = w;
  }
}

}  // namespace

Ordering order_compare(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw ValidationError("order comparison dimension mismatch");
  require_natural(x);
  require_natural(y);
  std::array<Coord, kMaxDim> a{}, b{};
  for (int i = 0; i < x.dim(); ++i) {
    a[static_cast<std::size_t>(i)] = x[i];
    b[static_cast<std::size_t>(i)] = y[i];
  }
  return compare_impl(a, b, x.dim());
}

Config initial_segment(Card n, int d) {
  check_dim(d);
  if (n < 1) throw ValidationError("initial_segment requires n >= 1");
  Card m = int_nth_root(n - 1, d) + 1;  // least m with m^d >= n
  Card cube = ipow_sat(m, d);
  if (cube > kMaterializeBudget)
    throw BudgetError("initial_segment candidate cube has " + card_to_string(cube) + " cells");

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(cube));
  Point p = Point::zero(d);
  for (int i = 0; i < d; ++i) p[i] = 1;
  for (;;) {
    pts.push_back(p);
    int axis = d - 1;
    while (axis >= 0) {
      if (p[axis] < static_cast<Coord>(m)) {
        ++p[axis];
        for (int j = axis + 1; j < d; ++j) p[j] = 1;
        break;
      }
      --axis;
    }
    if (axis < 0) break;
  }
  std::sort(pts.begin(), pts.end(), order_less);
  pts.resize(static_cast<std::size_t>(n));
  return Config::from_points(d, std::move(pts));
}

}  // namespace eip
