#include "eip/daisy.hpp"

#include <algorithm>
#include <sstream>

#include "eip/lattice.hpp"

namespace eip {

bool is_do1(const std::vector<Coord>& v) {
  if (v.empty() || v.back() < 1) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return v.front() - v.back() <= 1;
}

DO1Tuple::DO1Tuple(std::vector<Coord> values) : v_(std::move(values)) {
  if (!is_do1(v_)) {
    std::string s;
    for (Coord c : v_) s += std::to_string(c) + " ";
    throw ValidationError("not a DO1 tuple: " + s);
  }
}

Card DO1Tuple::product() const {
  Card p = 1;
  for (Coord c : v_) p *= c;
  return p;
}

int DO1Tuple::value_change_position() const {
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (v_[i] < v_[i - 1]) return static_cast<int>(i) + 1;
  return 1;
}

DO1Tuple DO1Tuple::bumped() const {
  std::vector<Coord> v = v_;
  v[static_cast<std::size_t>(value_change_position() - 1)] += 1;
  return DO1Tuple(std::move(v));
}

bool tuple_larger(const DO1Tuple& smaller, const DO1Tuple& bigger) {
  if (bigger.size() != smaller.size() + 1) return false;
  const int s = bigger.value_change_position();
  bool strict = false;
  for (int i = 0, j = 0; i < smaller.size(); ++i, ++j) {
    if (j + 1 == s) ++j;  // the bijection skips the value-change position
    if (smaller[i] > bigger[j]) return false;
    if (smaller[i] < bigger[j]) strict = true;
  }
  return strict;
}

DaisySpec::DaisySpec(int dim, std::vector<DO1Tuple> layers) : dim_(dim), layers_(std::move(layers)) {
  check_dim(dim_);
  if (layers_.empty() || static_cast<int>(layers_.size()) > dim_)
    throw ValidationError("daisy needs between 1 and dim layers");
  for (int k = 0; k < static_cast<int>(layers_.size()); ++k)
    if (layers_[static_cast<std::size_t>(k)].size() != dim_ - k)
      throw ValidationError("daisy layer " + std::to_string(k) + " must have length " +
                            std::to_string(dim_ - k));
  for (int k = 1; k < static_cast<int>(layers_.size()); ++k)
    if (!tuple_larger(layers_[static_cast<std::size_t>(k)], layers_[static_cast<std::size_t>(k - 1)]))
      throw ValidationError("daisy layer " + std::to_string(k) +
                            " is not dominated by its predecessor (larger-relation)");
}

Card DaisySpec::cardinality() const {
  Card n = 0;
  for (const DO1Tuple& t : layers_) n += t.product();
  return n;
}

DaisyPlacement DaisySpec::placement() const {
  DaisyPlacement pl;
  std::vector<int> free(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) free[static_cast<std::size_t>(i)] = i;
  pl.free_axes.push_back(free);
  for (int k = 1; k < layer_count(); ++k) {
    const DO1Tuple& prev = layers_[static_cast<std::size_t>(k - 1)];
    int s = prev.value_change_position();  // 1-based within free axes
    int axis = free[static_cast<std::size_t>(s - 1)];
    pl.frozen_axis.push_back(axis);
    pl.frozen_level.push_back(prev[s - 1] + 1);
    free.erase(free.begin() + (s - 1));
    pl.free_axes.push_back(free);
  }
  return pl;
}

DO1Tuple DaisySpec::enclosing_perfect() const {
  const DO1Tuple& top = layers_.front();
  return layer_count() == 1 ? top : top.bumped();
}

DaisySpec daisy_of_cardinality(Card n, int d) {
  check_dim(d);
  if (n < 1) throw ValidationError("daisy_of_cardinality requires n >= 1");
  std::vector<DO1Tuple> layers;
  Card rem = n;
  for (int len = d; rem > 0; --len) {
    invariant(len >= 1, "daisy layer construction ran out of dimensions");
    Card base = int_nth_root(rem, len);
    int split = 0;
    for (int t = 1; t < len; ++t) {
      if (ipow_sat(base + 1, t) * ipow_sat(base, len - t) <= rem)
        split = t;
      else
        break;
    }
    std::vector<Coord> v(static_cast<std::size_t>(len), static_cast<Coord>(base));
    for (int i = 0; i < split; ++i) v[static_cast<std::size_t>(i)] = static_cast<Coord>(base + 1);
    layers.emplace_back(std::move(v));
    rem -= layers.back().product();
  }
  return DaisySpec(d, std::move(layers));
}

Config materialize(const DaisySpec& spec, Card budget) {
  if (spec.cardinality() > budget)
    throw BudgetError("refusing to materialize daisy with " +
                      card_to_string(spec.cardinality()) + " points (budget " +
                      card_to_string(budget) + ")");
  const DaisyPlacement pl = spec.placement();
  const int d = spec.dim();
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(spec.cardinality()));
  for (int k = 0; k < spec.layer_count(); ++k) {
    const DO1Tuple& t = spec.layer(k);
    Point p = Point::zero(d);
    for (int i = 0; i < k; ++i)
      p[pl.frozen_axis[static_cast<std::size_t>(i)]] = pl.frozen_level[static_cast<std::size_t>(i)];
    const auto& axes = pl.free_axes[static_cast<std::size_t>(k)];
    std::vector<Coord> idx(static_cast<std::size_t>(t.size()), 1);
    for (;;) {
      for (int i = 0; i < t.size(); ++i)
        p[axes[static_cast<std::size_t>(i)]] = idx[static_cast<std::size_t>(i)];
      pts.push_back(p);
      int axis = t.size() - 1;
      while (axis >= 0) {
        if (idx[static_cast<std::size_t>(axis)] < t[axis]) {
          ++idx[static_cast<std::size_t>(axis)];
          for (int j = axis + 1; j < t.size(); ++j) idx[static_cast<std::size_t>(j)] = 1;
          break;
        }
        --axis;
      }
      if (axis < 0) break;
    }
  }
  return Config::from_points(d, std::move(pts));
}

namespace {

Card perfect_bonds(const DO1Tuple& t) {
  Card total = 0;
  for (int i = 0; i < t.size(); ++i) {
    Card term = t[i] - 1;
    for (int j = 0; j < t.size(); ++j)
      if (j != i) term *= t[j];
    total += term;
  }
  return total;
}

}  // namespace

Card daisy_bonds(const DaisySpec& spec) {
  Card bonds = 0;
  Card stack = 0;  // cardinality of layers below the current one
  for (int k = spec.layer_count() - 1; k >= 0; --k) {
    bonds += perfect_bonds(spec.layer(k)) + stack;
    stack += spec.layer(k).product();
  }
  return bonds;
}

Card daisy_perimeter(const DaisySpec& spec) {
  return 2 * Card{spec.dim()} * spec.cardinality() - 2 * daisy_bonds(spec);
}

Card eip_value(Card n, int d) {
  check_dim(d);
  if (n < 0) throw ValidationError("eip_value requires n >= 0");
  if (n == 0) return 0;
  return daisy_perimeter(daisy_of_cardinality(n, d));
}

bool is_minimizer(const Config& c) {
  if (c.empty_set()) return true;
  return edge_perimeter(c) == eip_value(c.size(), c.dim());
}

DaisyMatrix::DaisyMatrix(std::vector<std::vector<Cell>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ValidationError("daisy matrix needs at least one row");
  for (const auto& r : rows_)
    if (r.size() != rows_.front().size())
      throw ValidationError("daisy matrix rows must have equal width");
  check_dim(dim());
}

void DaisyMatrix::validate() const {
  const int d = dim();
  if (row_count() > d) throw ValidationError("dot placement: more rows than columns");
  std::vector<int> free(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) free[static_cast<std::size_t>(i)] = i;
  std::optional<DO1Tuple> prev;
  for (int r = 0; r < row_count(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    std::vector<Coord> nums;
    for (int c = 0, fi = 0; c < d; ++c) {
      bool should_be_free =
          fi < static_cast<int>(free.size()) && free[static_cast<std::size_t>(fi)] == c;
      if (should_be_free) ++fi;
      if (row[static_cast<std::size_t>(c)].has_value() != should_be_free)
        throw ValidationError("dot placement: row " + std::to_string(r + 1) + ", column " +
                              std::to_string(c + 1) +
                              (should_be_free ? " must be a number" : " must be a dot"));
      if (should_be_free) nums.push_back(*row[static_cast<std::size_t>(c)]);
    }
    if (!is_do1(nums))
      throw ValidationError("DO1: numbers of row " + std::to_string(r + 1) + " are not a DO1 tuple");
    DO1Tuple t{nums};
    if (prev && !tuple_larger(t, *prev))
      throw ValidationError("larger-relation: row " + std::to_string(r + 1) +
                            " is not dominated by row " + std::to_string(r));
    if (r + 1 < row_count()) {
      int s = t.value_change_position();
      free.erase(free.begin() + (s - 1));
    }
    prev = std::move(t);
  }
}

DaisyMatrix DaisyMatrix::parse(const std::string& text) {
  std::vector<std::vector<Cell>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream toks(line);
    std::vector<Cell> row;
    std::string tok;
    while (toks >> tok) {
      if (tok == ".") {
        row.push_back(std::nullopt);
      } else {
        try {
          row.push_back(static_cast<Coord>(std::stol(tok)));
        } catch (const std::exception&) {
          throw ValidationError("bad matrix token: " + tok);
        }
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return DaisyMatrix(std::move(rows));
}

std::string DaisyMatrix::format() const {
  std::ostringstream os;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      if (row[c])
        os << *row[c];
      else
        os << '.';
    }
    os << '\n';
  }
  return os.str();
}

DaisyMatrix to_matrix(const DaisySpec& spec) {
  const int d = spec.dim();
  const DaisyPlacement pl = spec.placement();
  std::vector<std::vector<DaisyMatrix::Cell>> rows;
  for (int k = 0; k < spec.layer_count(); ++k) {
    std::vector<DaisyMatrix::Cell> row(static_cast<std::size_t>(d), std::nullopt);
    const auto& axes = pl.free_axes[static_cast<std::size_t>(k)];
    for (int i = 0; i < spec.layer(k).size(); ++i)
      row[static_cast<std::size_t>(axes[static_cast<std::size_t>(i)])] = spec.layer(k)[i];
    rows.push_back(std::move(row));
  }
  return DaisyMatrix(std::move(rows));
}

DaisySpec from_matrix(const DaisyMatrix& m) {
  m.validate();
  std::vector<DO1Tuple> layers;
  for (const auto& row : m.rows()) {
    std::vector<Coord> nums;
    for (const auto& cell : row)
      if (cell) nums.push_back(*cell);
    layers.emplace_back(std::move(nums));
  }
  return DaisySpec(m.dim(), std::move(layers));
}

Point phi(const DaisyMatrix& m) {
  m.validate();
  const int d = m.dim();
  const auto& rows = m.rows();
  Point x = Point::zero(d);
  for (int c = 0; c < d; ++c) {
    const auto& last = rows.back()[static_cast<std::size_t>(c)];
    if (last) {
      x[c] = *last;
      continue;
    }
    for (int r = m.row_count() - 1; r >= 0; --r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        x[c] = *rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] + 1;
        break;
      }
    }
    invariant(x[c] > 0, "daisy matrix column of dots has no number above");
  }
  return x;
}

DaisyMatrix psi(const Point& x) {
  const int d = x.dim();
  std::vector<Coord> vals;
  std::vector<int> cols;
  for (int i = 0; i < d; ++i) {
    if (x[i] < 1) throw ValidationError("psi needs all coordinates >= 1");
    vals.push_back(x[i]);
    cols.push_back(i);
  }
  std::vector<std::vector<DaisyMatrix::Cell>> rows;
  for (;;) {
    std::vector<DaisyMatrix::Cell> row(static_cast<std::size_t>(d), std::nullopt);
    if (is_do1(vals)) {
      for (std::size_t i = 0; i < vals.size(); ++i)
        row[static_cast<std::size_t>(cols[i])] = vals[i];
      rows.push_back(std::move(row));
      break;
    }
    Coord mx = *std::max_element(vals.begin(), vals.end());
    std::size_t j = 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] == mx) j = i;
    // largest DO1 tuple preceding x: mx up to the rightmost maximum, mx-1 after
    for (std::size_t i = 0; i < vals.size(); ++i)
      row[static_cast<std::size_t>(cols[i])] = i < j ? mx : mx - 1;
    rows.push_back(std::move(row));
    vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(j));
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
  }
  DaisyMatrix m(std::move(rows));
  m.validate();
  return m;
}

}  // namespace eip
