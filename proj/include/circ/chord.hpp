#pragma once

#include <utility>

#include "circ/angle.hpp"

namespace circ {

inline constexpr double kMaxChord = 2.0;
// delta(2) = pi/2 - 1, the largest detour gain of any chord.
inline constexpr double kMaxDetour = kPi / 2.0 - 1.0;

// Central angle alpha(a) = 2 asin(a/2) subtended by a chord of length a.
double span_angle(double a);

// delta(a) = asin(a/2) - a/2, half of what a chord saves against its arc.
// Increasing and convex on [0, 2].
double detour_gain(double a);

// The unique a in [0, 2] with detour_gain(a) = d (bisection; f(result) >= d).
double inverse_detour(double d);

// A chord of the unit circle, stored with u -> v counter-clockwise along the
// shorter arc. For diameters (a = 2) the caller's orientation is kept.
class Shortcut {
 public:
  static Shortcut from_endpoints(Angle u, Angle v);
  // Chord of length a whose counter-clockwise arc is centered at `mid`.
  static Shortcut centered(double mid, double a);

  Angle u() const { return u_; }
  Angle v() const { return v_; }
  double length() const { return length_; }
  double span() const { return span_; }
  double detour() const { return detour_; }
  // Midpoint of the arc u -> v.
  Angle midpoint() const { return u_.rotated(0.5 * span_); }

  Shortcut rotated(double delta) const { return from_endpoints(u_.rotated(delta), v_.rotated(delta)); }

 private:
  Shortcut(Angle u, Angle v, double span);

  Angle u_;
  Angle v_;
  double length_ = 0.0;
  double span_ = 0.0;
  double detour_ = 0.0;
};

struct Umbra {
  Arc inner;
  Arc outer;
};

// Inner umbra [u + delta, v - delta] and its antipodal copy; both of length a.
Umbra umbra(const Shortcut& s);

// [u + alpha(delta), v - alpha(delta)], of length a - 4 delta(delta(a)).
Arc deep_umbra(const Shortcut& s);

// The arcs v -> u' and v' -> u, each of length pi - alpha(a).
std::pair<Arc, Arc> radiance(const Shortcut& s);

}  // namespace circ
