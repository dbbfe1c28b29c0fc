#pragma once

namespace holder {

/// Closed interval [a, b] with finite a < b.
class Interval {
 public:
  Interval(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return a_ + 0.5 * (b_ - a_); }
  bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

  /// j-th of `count` uniformly spaced points, both endpoints included.
  double grid_point(int j, int count) const noexcept;

  bool operator==(const Interval&) const = default;

 private:
  double a_;
  double b_;
};

}  // namespace holder
