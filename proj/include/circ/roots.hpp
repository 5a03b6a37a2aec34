#pragma once

#include <cmath>
#include <string>

#include "circ/errors.hpp"

namespace circ {

// Bisection for a non-decreasing f on [lo, hi]: returns x with f(x) >= target,
// within `tol` of the crossing. The returned point is always the upper end of
// the final bracket, so f(result) >= target holds exactly.
template <typename F>
double bisect_increasing(F f, double target, double lo, double hi, double tol = 1e-14,
                         int max_iter = 400) {
  if (f(lo) >= target) return lo;
  if (f(hi) < target) throw NumericError("bisection: target " + std::to_string(target) + " not bracketed");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

// Sign-change bisection: f(lo) and f(hi) must have opposite signs.
template <typename F>
double bisect_root(F f, double lo, double hi, double tol = 1e-14, int max_iter = 400) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) throw NumericError("bisection: no sign change on bracket");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace circ
