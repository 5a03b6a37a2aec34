#include "circ/strip.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circ/errors.hpp"

namespace circ {

namespace {

constexpr double kDstarTolerance = 1e-12;

void require_dstar(double dstar) {
  if (!(dstar >= 0.0 && dstar <= kMaxStripHalfHeight + kDstarTolerance))
    throw DomainError("strip half-height " + std::to_string(dstar) + " outside [0, pi - 2]");
}

void require_region_args(double a, double dstar) {
  if (!(a > 0.0 && a <= kMaxChord)) throw DomainError("chord length " + std::to_string(a) + " outside (0, 2]");
  require_dstar(dstar);
}

struct Gap {
  double start = 0.0;
  double length = 0.0;
};

std::vector<Gap> line_gaps(const std::vector<StripRect>& rects, double dstar, double xi, double tol) {
  struct Span {
    double start;
    double width;
  };
  std::vector<Span> spans;
  for (const auto& r : rects) {
    if (std::abs(r.dstar - dstar) > kDstarTolerance) throw DomainError("rectangles built for a different strip height");
    if (r.empty() || xi < r.xi_lo - tol || xi > r.xi_hi + tol) continue;
    if (r.width >= kTwoPi - tol) return {};
    spans.push_back({normalize_angle(r.theta_lo), r.width});
  }
  if (spans.empty()) return {{0.0, kTwoPi}};
  std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return x.start < y.start; });

  const double base = spans.front().start;
  std::vector<Gap> gaps;
  double reach = spans.front().width;
  for (std::size_t i = 1; i < spans.size(); ++i) {
    const double s = spans[i].start - base;
    if (s > reach + tol) gaps.push_back({base + reach, s - reach});
    reach = std::max(reach, s + spans[i].width);
  }
  if (reach + tol < kTwoPi) gaps.push_back({base + reach, kTwoPi - reach});
  for (auto& g : gaps) g.start = normalize_angle(g.start);
  return gaps;
}

std::vector<double> xi_breakpoints(const std::vector<StripRect>& rects, double dstar) {
  std::vector<double> ys{-dstar, dstar};
  for (const auto& r : rects) {
    if (r.empty()) continue;
    for (double y : {r.xi_lo, r.xi_hi})
      if (y > -dstar && y < dstar) ys.push_back(y);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

CoverResult result_from_gaps(const std::vector<Gap>& gaps, double dstar, double xi) {
  CoverResult r;
  r.covered = gaps.empty();
  if (r.covered) return r;
  const auto widest = std::max_element(gaps.begin(), gaps.end(), [](const Gap& x, const Gap& y) { return x.length < y.length; });
  for (const auto& g : gaps) r.gap_length += g.length;
  r.gap = StripCoord{normalize_angle(widest->start + 0.5 * widest->length), xi, dstar};
  return r;
}

}  // namespace

std::optional<StripCoord> pair_to_strip(Angle p, Angle q, double dstar) {
  require_dstar(dstar);
  double xi = ccw_offset(p.value(), q.value()) - kPi;
  if (std::abs(xi) > dstar) return std::nullopt;
  double theta = normalize_angle(p.value() + 0.5 * xi);
  if (theta >= kPi) {
    theta -= kPi;
    xi = -xi;
  }
  return StripCoord{theta, xi, dstar};
}

std::pair<Angle, Angle> strip_to_pair(const StripCoord& c) {
  return {Angle(c.theta - 0.5 * c.xi), Angle(c.theta + kPi + 0.5 * c.xi)};
}

bool StripRect::contains(const StripCoord& c, double eps) const {
  if (empty()) return false;
  if (c.xi < xi_lo - eps || c.xi > xi_hi + eps) return false;
  const double o = ccw_offset(theta_lo, c.theta);
  return o <= width + eps || o >= kTwoPi - eps;
}

RegionRects region_rectangles(double a, double dstar) {
  require_region_args(a, dstar);
  RegionRects r;
  const double width = kPi - a - dstar;
  if (width <= 0.0) {
    r.first.dstar = r.second.dstar = dstar;
    return r;
  }
  const double delta = detour_gain(a);
  double lo = dstar - 2.0 * delta;
  double hi = dstar;
  if (dstar <= delta) {
    r.shape = RegionShape::full_height;
    lo = -dstar;
  } else if (dstar <= kPi - a - delta) {
    r.shape = RegionShape::boundary_anchored;
  } else {
    r.shape = RegionShape::floating;
    hi = 2.0 * (kPi - a - delta) - dstar;
  }
  r.first = StripRect{0.5 * a + 0.5 * dstar, width, lo, hi, dstar};
  r.second = StripRect{normalize_angle(r.first.theta_lo + kPi), width, -hi, -lo, dstar};
  return r;
}

RegionRects region_rectangles(const Shortcut& s, double dstar) {
  RegionRects r = region_rectangles(s.length(), dstar);
  const double shift = s.midpoint().value();
  r.first.theta_lo = normalize_angle(r.first.theta_lo + shift);
  r.second.theta_lo = normalize_angle(r.second.theta_lo + shift);
  return r;
}

std::vector<StripRect> region_rectangles(const std::vector<Shortcut>& shortcuts, double dstar) {
  std::vector<StripRect> rects;
  for (const auto& s : shortcuts) {
    const RegionRects r = region_rectangles(s, dstar);
    if (r.shape == RegionShape::empty) continue;
    rects.push_back(r.first);
    rects.push_back(r.second);
  }
  return rects;
}

double midline_cut(double a, double dstar) {
  require_region_args(a, dstar);
  const double width = kPi - a - dstar;
  if (width <= 0.0) return 0.0;
  return detour_gain(a) >= 0.5 * dstar ? 2.0 * width : 0.0;
}

double boundary_cut(double a, double dstar) {
  require_region_args(a, dstar);
  const double width = kPi - a - dstar;
  if (width <= 0.0) return 0.0;
  const double delta = detour_gain(a);
  if (delta >= dstar) return 2.0 * width;
  if (dstar <= kPi - a - delta) return width;
  return 0.0;
}

double region_area(double a, double dstar) {
  require_region_args(a, dstar);
  const double width = kPi - a - dstar;
  if (width <= 0.0) return 0.0;
  const double a_star = dstar > kMaxDetour ? kMaxChord : inverse_detour(dstar);
  if (a > a_star) return 4.0 * dstar * width;
  return 4.0 * detour_gain(a) * width;
}

bool region_contains(const StripCoord& c, const Shortcut& s, double dstar) {
  if (std::abs(c.xi) > dstar) return false;
  double theta = ccw_offset(s.midpoint().value(), c.theta);
  double xi = c.xi;
  if (theta > kPi) {
    theta -= kPi;
    xi = -xi;
  }
  const double a = s.length();
  const double alpha = s.span();
  const double delta = s.detour();
  const double p = theta - 0.5 * xi;
  const double q = theta + kPi + 0.5 * xi;
  const bool in_a = p < 0.5 * alpha;
  const bool in_b = q > kTwoPi - 0.5 * alpha;
  double f;
  if (in_a && in_b)
    f = 2.0 * (a + delta) - kPi + xi;
  else if (in_a)
    f = kPi - 2.0 * delta + 2.0 * (0.5 * alpha - theta);
  else if (in_b)
    f = 2.0 * (theta - (kPi - 0.5 * alpha)) + kPi - 2.0 * delta;
  else
    f = kPi - 2.0 * delta - xi;
  return f <= kPi - dstar;
}

CoverResult covers_line(const std::vector<StripRect>& rects, double dstar, double xi, double tol) {
  require_dstar(dstar);
  return result_from_gaps(line_gaps(rects, dstar, xi, tol), dstar, xi);
}

CoverResult covers_strip(const std::vector<StripRect>& rects, double dstar, double tol) {
  require_dstar(dstar);
  const std::vector<double> ys = xi_breakpoints(rects, dstar);
  std::vector<double> lines;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    lines.push_back(ys[i]);
    if (i + 1 < ys.size()) lines.push_back(0.5 * (ys[i] + ys[i + 1]));
  }
  for (double xi : lines) {
    CoverResult r = covers_line(rects, dstar, xi, tol);
    if (!r.covered) return r;
  }
  return CoverResult{true, std::nullopt, 0.0};
}

std::vector<StripRect> uncovered_cells(const std::vector<StripRect>& rects, double dstar, double tol) {
  require_dstar(dstar);
  const std::vector<double> ys = xi_breakpoints(rects, dstar);
  std::vector<StripRect> cells;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const double mid = 0.5 * (ys[i] + ys[i + 1]);
    for (const Gap& g : line_gaps(rects, dstar, mid, tol)) cells.push_back(StripRect{g.start, g.length, ys[i], ys[i + 1], dstar});
  }
  return cells;
}

}  // namespace circ
