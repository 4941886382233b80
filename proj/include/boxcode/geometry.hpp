#pragma once

/**
 * Closed intervals, axis-parallel boxes and realizations, all with exact
 * rational endpoints, together with the endpoint-grid oracle that computes
 * the code of a realization by evaluating intersection patterns at
 * representative points.
 */

#include <optional>
#include <span>
#include <vector>

#include "boxcode/code.hpp"
#include "boxcode/rational.hpp"

namespace boxcode {

class Interval {
 public:
  /// The empty interval.
  Interval() = default;
  /// [lo, hi]; throws std::invalid_argument when lo > hi. lo == hi is a point.
  Interval(Rational lo, Rational hi);

  static Interval empty() { return {}; }

  bool is_empty() const { return !bounds_.has_value(); }
  bool is_degenerate() const { return bounds_ && bounds_->lo == bounds_->hi; }
  /// Precondition: !is_empty().
  const Rational& lo() const { return bounds_->lo; }
  const Rational& hi() const { return bounds_->hi; }

  bool contains(const Rational& x) const { return bounds_ && bounds_->lo <= x && x <= bounds_->hi; }
  bool interior_contains(const Rational& x) const { return bounds_ && bounds_->lo < x && x < bounds_->hi; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  struct Bounds {
    Rational lo, hi;
    friend bool operator==(const Bounds&, const Bounds&) = default;
  };
  std::optional<Bounds> bounds_;
};

class Box {
 public:
  /// The empty box.
  Box() = default;
  /// Cartesian product; any empty factor collapses the box to the empty box.
  explicit Box(std::vector<Interval> intervals);

  static Box empty() { return {}; }

  bool is_empty() const { return intervals_.empty(); }
  /// 0 for the empty box.
  int dim() const { return static_cast<int>(intervals_.size()); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Interval& axis(int j) const { return intervals_[j]; }
  /// True when some factor is a single point (the interior is then empty).
  bool has_empty_interior() const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> intervals_;
};

class Realization {
 public:
  /// Throws std::invalid_argument if dim < 1, boxes is empty, more than
  /// kMaxUniverse boxes are given, or a nonempty box has dimension != dim.
  Realization(int dim, std::vector<Box> boxes);

  /// One-dimensional realization from intervals.
  static Realization from_intervals(std::vector<Interval> intervals);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  const std::vector<Box>& boxes() const { return boxes_; }
  const Box& box(int i) const { return boxes_[i]; }
  /// For dim() == 1: the i-th interval (empty for an empty box).
  Interval interval(int i) const;

  friend bool operator==(const Realization&, const Realization&) = default;

 private:
  int dim_;
  std::vector<Box> boxes_;
};

/// code(U) of the closed boxes. `samples_per_gap` interior sample points are
/// taken strictly between consecutive endpoints (1 = midpoints only).
Code code_of_realization(const Realization& r, int samples_per_gap = 1);

/// Code of the interiors: open-interval membership on every axis.
Code code_of_interiors(const Realization& r, int samples_per_gap = 1);

/// Projection onto each coordinate axis; empty boxes project to empty intervals.
std::vector<Realization> axis_decompose(const Realization& r);

/// Box i is the product of the i-th boxes of all parts (dimensions add up).
/// Throws std::invalid_argument when the parts disagree on the number of boxes.
Realization product_realization(std::span<const Realization> parts);

}  // namespace boxcode
