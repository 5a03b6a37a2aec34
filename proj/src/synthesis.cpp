#include "circ/synthesis.hpp"

#include <cmath>
#include <string>

#include "circ/errors.hpp"
#include "circ/roots.hpp"
#include "circ/strip.hpp"

namespace circ {

namespace {

double chord_plus_detour(double a) { return a + detour_gain(a); }

// Midpoint that puts the first region rectangle of a chord of length a at theta = left.
double midpoint_for_left_edge(double left, double a, double dstar) { return left - 0.5 * a - 0.5 * dstar; }

// a with a + delta(a) = target, or 2 when the target is beyond reach.
double solve_chord_plus_detour(double target) {
  if (target >= chord_plus_detour(kMaxChord)) return kMaxChord;
  return bisect_increasing(chord_plus_detour, target, 0.0, kMaxChord);
}

}  // namespace

KStarSolution solve_k_star(int k) {
  if (k < 2) throw DomainError("k must be at least 2");
  KStarSolution sol;
  sol.k = k;
  sol.a_star = solve_chord_plus_detour(static_cast<double>(k - 1) * kPi / k);
  sol.d_star = detour_gain(sol.a_star);
  sol.mu = inverse_detour(0.5 * sol.d_star);

  const double d = sol.d_star;
  const auto g = [d](double x) { return detour_gain(x) + detour_gain(kPi - d - x) - 0.5 * d; };
  const double lo = kPi - d - kMaxChord;
  const double mid = 0.5 * (kPi - d);
  if (lo >= 0.0 && g(mid) < 0.0 && g(kMaxChord) >= 0.0) {
    sol.sigma = bisect_root(g, lo, mid);
    sol.lambda = bisect_root(g, mid, kMaxChord);
  }
  return sol;
}

Configuration uniform_config(int k) {
  if (k < 2 || k > 5) throw DomainError("uniform configurations exist for k in {2, 3, 4, 5}");
  const KStarSolution sol = solve_k_star(k);
  Configuration c;
  c.label = "uniform-" + std::to_string(k);
  c.provenance = "k chords of length a*_k tiling the strip";
  c.target_detour = sol.d_star;
  for (int j = 0; j < k; ++j) {
    const double left = j * kPi / k;
    c.shortcuts.push_back(Shortcut::centered(midpoint_for_left_edge(left, sol.a_star, sol.d_star), sol.a_star));
  }
  return c;
}

Configuration six_config() {
  Configuration c;
  c.label = "six";
  c.provenance = "six diameters at rotations j pi / 6";
  c.target_detour = kMaxDetour;
  for (int j = 0; j < 6; ++j) {
    const Angle u(j * kPi / 6.0);
    c.shortcuts.push_back(Shortcut::from_endpoints(u, u.antipode()));
  }
  return c;
}

EightSolution solve_eight() {
  const auto residual = [](double d) {
    const double a_long = solve_chord_plus_detour(kPi - d);
    const double a_short = 0.5 * kPi - d;
    return detour_gain(a_long) + detour_gain(a_short) - d;
  };
  const double d = bisect_root(residual, kMaxDetour, 0.5 * kPi - 1e-9);
  EightSolution sol;
  sol.d_star = d;
  sol.a_short = 0.5 * kPi - d;
  sol.a_long = solve_chord_plus_detour(kPi - d);
  return sol;
}

std::vector<Configuration> eight_placements(const EightSolution& sol) {
  const double d = sol.d_star;
  const double w_long = kPi - sol.a_long - d;
  // Offsets of the six long top rectangles inside [pi, 2 pi]: the overlap
  // pushed to the end, spread evenly, or split between both ends.
  std::vector<std::vector<double>> long_layouts(3);
  for (int j = 0; j < 6; ++j) {
    long_layouts[0].push_back(j * kPi / 6.0);
    long_layouts[1].push_back(j * (kPi - w_long) / 5.0);
    long_layouts[2].push_back(j * kPi / 6.0 - 0.5 * (w_long - kPi / 6.0));
  }
  std::vector<Configuration> out;
  for (const auto& layout : long_layouts) {
    Configuration c;
    c.label = "eight";
    c.provenance = "two short and six long chords covering the strip";
    c.target_detour = d;
    for (int i = 0; i < 2; ++i)
      c.shortcuts.push_back(Shortcut::centered(midpoint_for_left_edge(i * 0.5 * kPi, sol.a_short, d), sol.a_short));
    for (double offset : layout)
      c.shortcuts.push_back(Shortcut::centered(midpoint_for_left_edge(kPi + offset, sol.a_long, d), sol.a_long));
    out.push_back(std::move(c));
  }
  return out;
}

Configuration eight_config() {
  const EightSolution sol = solve_eight();
  for (auto& c : eight_placements(sol)) {
    if (covers_strip(region_rectangles(c.shortcuts, sol.d_star), sol.d_star).covered) return c;
  }
  throw NumericError("no eight-shortcut placement covers the strip");
}

AsymptoticConfig asymptotic_config(int m) {
  if (m < 4) throw DomainError("asymptotic configuration needs m >= 4");
  AsymptoticConfig out;
  out.m = m;
  out.points = static_cast<std::size_t>(std::ceil(4.0 * kPi * m));
  const double step = kTwoPi / static_cast<double>(out.points);
  const double threshold = kPi - 4.0 / std::sqrt(static_cast<double>(m));

  Configuration& c = out.config;
  c.label = "asymptotic-" + std::to_string(m);
  c.provenance = "near-antipodal point pairs plus spaced chords of arc pi - t/m";
  for (std::size_t i = 0; i < out.points; ++i) {
    for (std::size_t j = i + 1; j < out.points; ++j) {
      const double off = static_cast<double>(j - i) * step;
      if (std::min(off, kTwoPi - off) > threshold) {
        c.shortcuts.push_back(Shortcut::from_endpoints(Angle(i * step), Angle(j * step)));
        ++out.family1;
      }
    }
  }

  const int t_min = static_cast<int>(std::floor(4.0 * std::sqrt(static_cast<double>(m)) + 1e-9)) + 1;
  for (int t = t_min; t <= 2 * m - 1; ++t) {
    const double ratio = static_cast<double>(t) / m;
    AsymptoticConfig::Family fam;
    fam.t = t;
    fam.spacing_bound = ratio * ratio / 12.0;
    fam.count = static_cast<std::size_t>(std::ceil(kTwoPi / fam.spacing_bound));
    const double arc = kPi - ratio;
    for (std::size_t j = 0; j < fam.count; ++j) {
      const double mid = kTwoPi * static_cast<double>(j) / fam.count;
      c.shortcuts.push_back(Shortcut::from_endpoints(Angle(mid - 0.5 * arc), Angle(mid + 0.5 * arc)));
    }
    out.family2_total += fam.count;
    out.family2.push_back(fam);
  }
  return out;
}

}  // namespace circ
