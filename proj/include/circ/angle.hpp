#pragma once

#include <compare>
#include <numbers>

namespace circ {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Values within this distance below 2*pi are snapped to 0 on normalization.
inline constexpr double kWrapTolerance = 1e-12;

// Reduces any real number into [0, 2*pi).
double normalize_angle(double x);

// Counter-clockwise offset from `from` to `to`, in [0, 2*pi).
double ccw_offset(double from, double to);

// A point on the unit circle, parameterized by its polar angle.
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(normalize_angle(radians)) {}

  double value() const { return value_; }
  Angle rotated(double delta) const { return Angle(value_ + delta); }
  Angle antipode() const { return rotated(kPi); }

  friend bool operator==(Angle a, Angle b) { return a.value_ == b.value_; }
  friend auto operator<=>(Angle a, Angle b) { return a.value_ <=> b.value_; }

 private:
  double value_ = 0.0;
};

// Length of the shorter arc between two points; the metric d(p, q) without shortcuts.
double circle_distance(Angle p, Angle q);

// Counter-clockwise arc from `start` covering `length` radians.
class Arc {
 public:
  Arc() = default;
  // Arc from start to end, counter-clockwise.
  static Arc between(Angle start, Angle end);
  static Arc from_length(Angle start, double length);

  Angle start() const { return start_; }
  Angle end() const { return start_.rotated(length_); }
  double length() const { return length_; }
  Angle midpoint() const { return start_.rotated(0.5 * length_); }
  Arc rotated(double delta) const { return from_length(start_.rotated(delta), length_); }

  // Membership with an explicit margin: eps > 0 grows the arc at both ends,
  // eps < 0 shrinks it (eps = -1e-9 tests the interior). Boundary semantics
  // are left to the caller.
  bool contains(Angle x, double eps = 0.0) const;

 private:
  Angle start_;
  double length_ = 0.0;
};

}  // namespace circ
