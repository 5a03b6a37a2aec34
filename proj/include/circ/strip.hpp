#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circ/angle.hpp"
#include "circ/chord.hpp"

namespace circ {

// Largest useful strip half-height: pairs at angle <= 2 never need a shortcut.
inline constexpr double kMaxStripHalfHeight = kPi - 2.0;

// (theta, xi) stands for the pair p = theta - xi/2, q = theta + pi + xi/2.
struct StripCoord {
  double theta = 0.0;
  double xi = 0.0;
  double dstar = 0.0;
};

// Representative with theta in [0, pi); nullopt when the pair's ccw angle is
// outside [pi - dstar, pi + dstar].
std::optional<StripCoord> pair_to_strip(Angle p, Angle q, double dstar);
std::pair<Angle, Angle> strip_to_pair(const StripCoord& c);

// Closed axis-aligned rectangle on the cylinder [0, 2pi) x [-dstar, dstar].
// The theta interval starts at theta_lo and may wrap past 2pi.
struct StripRect {
  double theta_lo = 0.0;
  double width = 0.0;
  double xi_lo = 0.0;
  double xi_hi = 0.0;
  double dstar = 0.0;

  bool empty() const { return width <= 0.0 || xi_hi < xi_lo; }
  double height() const { return empty() ? 0.0 : xi_hi - xi_lo; }
  double area() const { return empty() ? 0.0 : width * height(); }
  bool contains(const StripCoord& c, double eps = 0.0) const;
};

enum class RegionShape {
  full_height,       // dstar <= delta(a)
  boundary_anchored, // delta(a) < dstar <= pi - a - delta(a)
  floating,          // dstar > pi - a - delta(a); only when dstar > delta(2)
  empty,             // a + dstar >= pi
};

struct RegionRects {
  StripRect first;   // theta in the right half relative to the chord, hangs from xi = dstar
  StripRect second;  // first shifted by pi and mirrored in xi
  RegionShape shape = RegionShape::empty;
};

// Region of pairs with d_s <= pi - dstar, for the chord of length a centered at
// angle 0 (endpoints -alpha/2, alpha/2).
RegionRects region_rectangles(double a, double dstar);
// Same region for an arbitrary shortcut: translated by its midpoint.
RegionRects region_rectangles(const Shortcut& s, double dstar);

// Length of the region cut by the midline xi = 0 and by the boundary xi = dstar.
double midline_cut(double a, double dstar);
double boundary_cut(double a, double dstar);

// Area bound A(a, dstar): 4 dstar (pi - a - dstar) above a*, 4 delta(a) (pi - a - dstar)
// below. Equal to the true region area whenever dstar <= delta(2).
double region_area(double a, double dstar);

// Membership decided by the distance formula through s (cases A-D), not by
// the rectangles.
bool region_contains(const StripCoord& c, const Shortcut& s, double dstar);

struct CoverResult {
  bool covered = false;
  // An uncovered pair, when not covered.
  std::optional<StripCoord> gap;
  // Length of the uncovered theta set on the witness line.
  double gap_length = 0.0;
};

inline constexpr double kCoverTolerance = 1e-12;

// Union of the closed theta intervals cut by the rects on the line xi = c.
CoverResult covers_line(const std::vector<StripRect>& rects, double dstar, double xi, double tol = kCoverTolerance);
// Whole strip: checks every xi breakpoint and every cell between breakpoints.
CoverResult covers_strip(const std::vector<StripRect>& rects, double dstar, double tol = kCoverTolerance);

// Uncovered parts of the strip as rectangles (one per gap per xi cell).
std::vector<StripRect> uncovered_cells(const std::vector<StripRect>& rects, double dstar, double tol = kCoverTolerance);

// All region rectangles of a set of shortcuts, two per shortcut, empty ones dropped.
std::vector<StripRect> region_rectangles(const std::vector<Shortcut>& shortcuts, double dstar);

}  // namespace circ
