#include "eip/config.hpp"

#include <algorithm>

namespace eip {

Box::Box(Point origin, std::vector<Coord> extents)
    : origin_(origin), extents_(std::move(extents)) {
  if (static_cast<int>(extents_.size()) != origin_.dim())
    throw ValidationError("box extents/origin dimension mismatch");
  for (Coord e : extents_)
    if (e < 1) throw ValidationError("box extents must be >= 1");
}

Card Box::cells() const {
  Card n = 1;
  for (Coord e : extents_) n *= e;
  return n;
}

bool Box::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (p[i] < lo(i) || p[i] > hi(i)) return false;
  return true;
}

Config Config::empty(int dim) {
  check_dim(dim);
  Config c;
  c.dim_ = dim;
  return c;
}

Config Config::from_points(int dim, std::vector<Point> pts) {
  check_dim(dim);
  for (const Point& p : pts)
    if (p.dim() != dim) throw ValidationError("point dimension mismatch in configuration");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Config c;
  c.dim_ = dim;
  c.pts_ = std::move(pts);
  return c;
}

Config Config::from_box(Box b) {
  Config c;
  c.dim_ = b.dim();
  c.box_ = std::move(b);
  return c;
}

const Box& Config::box() const {
  if (!box_) throw InvariantError("config is not box-backed");
  return *box_;
}

bool Config::empty_set() const { return !box_ && pts_.empty(); }

Card Config::size() const {
  return box_ ? box_->cells() : static_cast<Card>(pts_.size());
}

const std::vector<Point>& Config::points() const {
  if (box_) throw InvariantError("implicit box config: materialize before point access");
  return pts_;
}

Config Config::materialized(Card budget) const {
  if (!box_) return *this;
  const Box& b = *box_;
  if (b.cells() > budget)
    throw BudgetError("refusing to materialize " + card_to_string(b.cells()) +
                      " cells (budget " + card_to_string(budget) + ")");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(b.cells()));
  Point p = Point::zero(dim_);
  for (int i = 0; i < dim_; ++i) p[i] = b.lo(i);
  for (;;) {
    pts.push_back(p);
    int axis = dim_ - 1;
    while (axis >= 0) {
      if (p[axis] < b.hi(axis)) {
        ++p[axis];
        for (int j = axis + 1; j < dim_; ++j) p[j] = b.lo(j);
        break;
      }
      --axis;
    }
    if (axis < 0) break;
  }
  return from_points(dim_, std::move(pts));
}

bool Config::contains(const Point& p) const {
  if (p.dim() != dim_) return false;
  if (box_) return box_->contains(p);
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

Config Config::translated(const Point& by) const {
  if (by.dim() != dim_) throw ValidationError("translation dimension mismatch");
  if (box_) {
    return from_box(Box(box_->origin().plus(by), box_->extents()));
  }
  std::vector<Point> pts;
  pts.reserve(pts_.size());
  for (const Point& p : pts_) pts.push_back(p.plus(by));
  Config c;
  c.dim_ = dim_;
  c.pts_ = std::move(pts);  // translation preserves sorted order
  return c;
}

bool operator==(const Config& a, const Config& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.size() != b.size()) return false;
  if (a.box_ && b.box_) return *a.box_ == *b.box_;
  if (!a.box_ && !b.box_) return a.pts_ == b.pts_;
  const Config& boxed = a.box_ ? a : b;
  const Config& expl = a.box_ ? b : a;
  for (const Point& p : expl.pts_)
    if (!boxed.contains(p)) return false;
  return true;  // sizes equal and explicit side is duplicate-free
}

namespace {
constexpr Card kDenseCellLimit = Card{1} << 26;
}

Membership::Membership(const Config& c) : cfg_(c) {
  if (c.is_box() || c.empty_set()) return;
  const auto& pts = c.points();
  lo_ = pts.front();
  Point hi = pts.front();
  for (const Point& p : pts)
    for (int i = 0; i < c.dim(); ++i) {
      lo_[i] = std::min(lo_[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  Card cells = 1;
  for (int i = 0; i < c.dim(); ++i) {
    ext_[static_cast<std::size_t>(i)] = hi[i] - lo_[i] + 1;
    cells *= ext_[static_cast<std::size_t>(i)];
  }
  if (cells > kDenseCellLimit) return;
  dense_ = true;
  bits_.assign(static_cast<std::size_t>((cells + 63) / 64), 0);
  for (const Point& p : pts) {
    std::int64_t idx = index_of(p);
    bits_[static_cast<std::size_t>(idx >> 6)] |= 1ull << (idx & 63);
  }
}

std::int64_t Membership::index_of(const Point& p) const {
  std::int64_t idx = 0;
  for (int i = 0; i < cfg_.dim(); ++i) {
    std::int64_t c = static_cast<std::int64_t>(p[i]) - lo_[i];
    if (c < 0 || c >= ext_[static_cast<std::size_t>(i)]) return -1;
    idx = idx * ext_[static_cast<std::size_t>(i)] + c;
  }
  return idx;
}

bool Membership::contains(const Point& p) const {
  if (!dense_) return cfg_.contains(p);
  std::int64_t idx = index_of(p);
  if (idx < 0) return false;
  return (bits_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1;
}

}  // namespace eip
