#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eip/config.hpp"

namespace eip {

// Nonincreasing tuple of positive integers whose oscillation (first minus
// last entry) is at most 1. The edge lengths of a perfect daisy.
class DO1Tuple {
 public:
  explicit DO1Tuple(std::vector<Coord> values);

  int size() const { return static_cast<int>(v_.size()); }
  Coord operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  const std::vector<Coord>& values() const { return v_; }
  Card product() const;

  // 1-based: 1 for a constant tuple, otherwise the first index whose value
  // drops below its predecessor.
  int value_change_position() const;

  // The successor tuple: one entry raised at the value-change position.
  DO1Tuple bumped() const;

  friend bool operator==(const DO1Tuple& a, const DO1Tuple& b) { return a.v_ == b.v_; }

 private:
  std::vector<Coord> v_;
};

bool is_do1(const std::vector<Coord>& v);

// Whether `bigger` (length n+1) dominates `smaller` (length n) through the
// increasing bijection that skips bigger's value-change position, with at
// least one strict inequality.
bool tuple_larger(const DO1Tuple& smaller, const DO1Tuple& bigger);

struct DaisyPlacement {
  std::vector<int> frozen_axis;               // s_1..s_h as 0-based global axes
  std::vector<Coord> frozen_level;            // pinned coordinate of each
  std::vector<std::vector<int>> free_axes;    // per layer, increasing global axes
};

// Coefficient family of a daisy: layer k (0-based) is a DO1 tuple of length
// dim-k, each layer dominated by its predecessor. Layer 0 is the perfect
// block; layer k >= 1 sits flat against a face, pinned along the
// value-change axis of layer k-1.
class DaisySpec {
 public:
  DaisySpec(int dim, std::vector<DO1Tuple> layers);

  int dim() const { return dim_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  const DO1Tuple& layer(int k) const { return layers_[static_cast<std::size_t>(k)]; }
  const std::vector<DO1Tuple>& layers() const { return layers_; }

  Card cardinality() const;
  DaisyPlacement placement() const;

  // Extents of the smallest perfect daisy containing this one.
  DO1Tuple enclosing_perfect() const;

  friend bool operator==(const DaisySpec& a, const DaisySpec& b) {
    return a.dim_ == b.dim_ && a.layers_ == b.layers_;
  }

 private:
  int dim_;
  std::vector<DO1Tuple> layers_;
};

// The unique daisy with n points, built greedily: each layer is the largest
// DO1 tuple whose product fits the remaining mass, found by integer root
// plus a scan over the split position.
DaisySpec daisy_of_cardinality(Card n, int d);

Config materialize(const DaisySpec& spec, Card budget = kMaterializeBudget);

Card daisy_bonds(const DaisySpec& spec);

// Edge perimeter without materializing: layer by layer, every point of the
// residual stack has exactly one bond into the block above it.
Card daisy_perimeter(const DaisySpec& spec);

// Minimal edge perimeter over all n-point subsets of Z^d.
Card eip_value(Card n, int d);

bool is_minimizer(const Config& c);

// Dot/number matrix encoding a daisy. Text form: one row per line,
// space-separated tokens, '.' for dots.
class DaisyMatrix {
 public:
  using Cell = std::optional<Coord>;
  explicit DaisyMatrix(std::vector<std::vector<Cell>> rows);

  int dim() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  // Throws ValidationError naming the first violated rule
  // (dot placement / DO1 / larger-relation).
  void validate() const;

  static DaisyMatrix parse(const std::string& text);
  std::string format() const;

  friend bool operator==(const DaisyMatrix& a, const DaisyMatrix& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<Cell>> rows_;
};

DaisyMatrix to_matrix(const DaisySpec& spec);
DaisySpec from_matrix(const DaisyMatrix& m);

// The matrix-to-order-key bijection: each dot in the last row is replaced by
// one more than the first number above it.
Point phi(const DaisyMatrix& m);

// Inverse of phi: repeatedly strip the largest DO1 row anchored at the
// rightmost maximal entry until a DO1 tuple remains.
DaisyMatrix psi(const Point& x);

}  // namespace eip
