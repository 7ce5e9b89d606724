#pragma once

#include <optional>
#include <vector>

#include "eip/intmath.hpp"
#include "eip/point.hpp"

namespace eip {

// Explicit point sets are refused above this cell count; families beyond it
// stay box-backed and are handled in closed form.
inline constexpr Card kMaterializeBudget = 10'000'000;

// Axis-aligned cuboid of lattice points: origin + {1..e_1} x ... x {1..e_d}.
class Box {
 public:
  Box(Point origin, std::vector<Coord> extents);

  int dim() const { return origin_.dim(); }
  const Point& origin() const { return origin_; }
  Coord extent(int axis) const { return extents_[static_cast<std::size_t>(axis)]; }
  const std::vector<Coord>& extents() const { return extents_; }

  Coord lo(int axis) const { return checked_add(origin_[axis], 1); }
  Coord hi(int axis) const { return checked_add(origin_[axis], extents_[static_cast<std::size_t>(axis)]); }

  Card cells() const;
  bool contains(const Point& p) const;

  friend bool operator==(const Box& a, const Box& b) {
    return a.origin_ == b.origin_ && a.extents_ == b.extents_;
  }

 private:
  Point origin_;
  std::vector<Coord> extents_;
};

// A finite subset of Z^d. Two representations share one interface: an
// explicit sorted point vector, or an implicit Box whose counts are computed
// in closed form. Immutable after construction and safe to share.
class Config {
 public:
  static Config empty(int dim);
  static Config from_points(int dim, std::vector<Point> pts);  // sorts, dedups
  static Config from_box(Box b);

  int dim() const { return dim_; }
  bool is_box() const { return box_.has_value(); }
  const Box& box() const;
  bool empty_set() const;
  Card size() const;

  // Explicit point access; boxes must be materialized first.
  const std::vector<Point>& points() const;

  Config materialized(Card budget = kMaterializeBudget) const;
  bool contains(const Point& p) const;  // O(log n) explicit, O(1) box
  Config translated(const Point& by) const;

  friend bool operator==(const Config& a, const Config& b);

 private:
  int dim_ = 0;
  std::vector<Point> pts_;
  std::optional<Box> box_;
};

// Fast membership for repeated queries against one Config: a dense bitset
// over the minimal rectangle when it has at most 2^26 cells, a sorted-vector
// binary search otherwise. Bond counting over the dense path is the
// throughput bottleneck of the brute-force oracle.
class Membership {
 public:
  explicit Membership(const Config& c);
  bool contains(const Point& p) const;
  bool dense() const { return dense_; }

 private:
  const Config& cfg_;
  bool dense_ = false;
  Point lo_;
  std::array<Coord, kMaxDim> ext_{};
  std::vector<std::uint64_t> bits_;
  std::int64_t index_of(const Point& p) const;  // -1 if outside box
};

}  // namespace eip
