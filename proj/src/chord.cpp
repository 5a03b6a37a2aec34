#include "circ/chord.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circ/errors.hpp"
#include "circ/roots.hpp"

namespace circ {

namespace {

void require_chord_length(double a) {
  if (!(a >= 0.0 && a <= kMaxChord)) throw DomainError("chord length " + std::to_string(a) + " outside [0, 2]");
}

void require_nondegenerate(const Shortcut& s) {
  if (s.length() <= 0.0) throw DegenerateShortcut("shortcut of length 0");
}

}  // namespace

double span_angle(double a) {
  require_chord_length(a);
  return 2.0 * std::asin(0.5 * a);
}

double detour_gain(double a) {
  require_chord_length(a);
  return std::asin(0.5 * a) - 0.5 * a;
}

double inverse_detour(double d) {
  if (!(d >= 0.0 && d <= kMaxDetour)) throw DomainError("detour gain " + std::to_string(d) + " outside [0, pi/2 - 1]");
  if (d == 0.0) return 0.0;
  if (d >= detour_gain(kMaxChord)) return kMaxChord;
  return bisect_increasing(detour_gain, d, 0.0, kMaxChord);
}

Shortcut::Shortcut(Angle u, Angle v, double span) : u_(u), v_(v), span_(span) {
  length_ = 2.0 * std::sin(0.5 * span_);
  detour_ = 0.5 * (span_ - length_);
}

Shortcut Shortcut::from_endpoints(Angle u, Angle v) {
  double span = ccw_offset(u.value(), v.value());
  if (span == 0.0) throw DegenerateShortcut("shortcut endpoints coincide");
  if (span > kPi + kWrapTolerance) {
    std::swap(u, v);
    span = kTwoPi - span;
  }
  return Shortcut(u, v, std::min(span, kPi));
}

Shortcut Shortcut::centered(double mid, double a) {
  if (a <= 0.0) throw DegenerateShortcut("shortcut of length 0");
  // Through from_endpoints so that the state depends on (u, v) alone and a
  // shortcut read back from its endpoints is bit-identical.
  const double alpha = span_angle(a);
  return from_endpoints(Angle(mid - 0.5 * alpha), Angle(mid + 0.5 * alpha));
}

Umbra umbra(const Shortcut& s) {
  require_nondegenerate(s);
  const Arc inner = Arc::from_length(s.u().rotated(s.detour()), s.span() - 2.0 * s.detour());
  return {inner, inner.rotated(kPi)};
}

Arc deep_umbra(const Shortcut& s) {
  require_nondegenerate(s);
  const double inset = span_angle(s.detour());
  return Arc::from_length(s.u().rotated(inset), std::max(0.0, s.span() - 2.0 * inset));
}

std::pair<Arc, Arc> radiance(const Shortcut& s) {
  require_nondegenerate(s);
  const double len = std::max(0.0, kPi - s.span());
  return {Arc::from_length(s.v(), len), Arc::from_length(s.v().antipode(), len)};
}

}  // namespace circ
