#include "circ/angle.hpp"

#include <algorithm>
#include <cmath>

#include "circ/errors.hpp"

namespace circ {

double normalize_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi - kWrapTolerance) r = 0.0;
  return r;
}

double ccw_offset(double from, double to) { return normalize_angle(to - from); }

double circle_distance(Angle p, Angle q) {
  const double o = ccw_offset(p.value(), q.value());
  return std::min(o, kTwoPi - o);
}

Arc Arc::between(Angle start, Angle end) {
  return from_length(start, ccw_offset(start.value(), end.value()));
}

Arc Arc::from_length(Angle start, double length) {
  if (!(length >= 0.0 && length <= kTwoPi)) throw DomainError("arc length outside [0, 2pi]");
  Arc arc;
  arc.start_ = start;
  arc.length_ = length;
  return arc;
}

bool Arc::contains(Angle x, double eps) const {
  // Work on the cover: offset of x from the start, then compare with [-eps, length + eps].
  double o = ccw_offset(start_.value(), x.value());
  if (eps > 0.0 && o > kTwoPi - eps) o -= kTwoPi;
  if (eps >= 0.0) return o >= -eps && o <= length_ + eps;
  return o > -eps && o < length_ + eps;
}

}  // namespace circ
