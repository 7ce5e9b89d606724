#include "eip/point.hpp"

#include <limits>
#include <sstream>

namespace eip {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw ValidationError("dimension must be in 1.." + std::to_string(kMaxDim) +
                          ", got " + std::to_string(dim));
}

Coord checked_add(Coord a, Coord b) {
  std::int64_t s = static_cast<std::int64_t>(a) + b;
  if (s > std::numeric_limits<Coord>::max() || s < std::numeric_limits<Coord>::min())
    throw ValidationError("coordinate overflow in translation");
  return static_cast<Coord>(s);
}

Point::Point(std::initializer_list<Coord> cs) {
  check_dim(static_cast<int>(cs.size()));
  dim_ = static_cast<int>(cs.size());
  int i = 0;
  for (Coord c : cs) v_[static_cast<std::size_t>(i++)] = c;
}

Point::Point(std::span<const Coord> cs) {
  check_dim(static_cast<int>(cs.size()));
  dim_ = static_cast<int>(cs.size());
  for (int i = 0; i < dim_; ++i) v_[static_cast<std::size_t>(i)] = cs[static_cast<std::size_t>(i)];
}

Point Point::zero(int dim) {
  check_dim(dim);
  Point p;
  p.dim_ = dim;
  return p;
}

Point Point::plus(const Point& o) const {
  if (o.dim_ != dim_) throw ValidationError("dimension mismatch in point addition");
  Point r = *this;
  for (int i = 0; i < dim_; ++i) r[i] = checked_add(r[i], o[i]);
  return r;
}

Point Point::minus(const Point& o) const {
  if (o.dim_ != dim_) throw ValidationError("dimension mismatch in point subtraction");
  Point r = *this;
  for (int i = 0; i < dim_; ++i) {
    std::int64_t s = static_cast<std::int64_t>(r[i]) - o[i];
    if (s > std::numeric_limits<Coord>::max() || s < std::numeric_limits<Coord>::min())
      throw ValidationError("coordinate overflow in translation");
    r[i] = static_cast<Coord>(s);
  }
  return r;
}

Point Point::shifted(int axis, Coord delta) const {
  Point r = *this;
  r[axis] = checked_add(r[axis], delta);
  return r;
}

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) {
    if (i) os << ',';
    os << v_[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

}  // namespace eip
