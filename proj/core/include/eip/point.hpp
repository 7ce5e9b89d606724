#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eip/errors.hpp"

namespace eip {

inline constexpr int kMaxDim = 8;

// Lattice coordinates are signed 32-bit; translations that would wrap are a
// checked error rather than silent corruption of perimeter counts.
using Coord = std::int32_t;

class Point {
 public:
  Point() = default;
  Point(std::initializer_list<Coord> cs);
  explicit Point(std::span<const Coord> cs);
  static Point zero(int dim);

  int dim() const { return dim_; }
  Coord operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  Coord& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
  std::span<const Coord> coords() const { return {v_.data(), static_cast<std::size_t>(dim_)}; }

  Point plus(const Point& o) const;   // checked add
  Point minus(const Point& o) const;  // checked sub
  Point shifted(int axis, Coord delta) const;  // axis 0-based

  friend bool operator==(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.v_[static_cast<std::size_t>(i)] != b.v_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
    for (int i = 0; i < a.dim_; ++i) {
      if (auto c = a.v_[static_cast<std::size_t>(i)] <=> b.v_[static_cast<std::size_t>(i)]; c != 0)
        return c;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const;

 private:
  std::array<Coord, kMaxDim> v_{};
  int dim_ = 0;
};

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
      h ^= static_cast<std::uint32_t>(p[i]);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

void check_dim(int dim);
Coord checked_add(Coord a, Coord b);

}  // namespace eip
