#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "circ/metric.hpp"

namespace circ {

struct KStarSolution {
  int k = 0;
  double a_star = 0.0;  // solves a + delta(a) = (k-1) pi / k, clamped to 2 for k >= 6
  double d_star = 0.0;  // delta(a_star); pi - d_star is the target diameter
  double mu = 0.0;      // delta(mu) = d_star / 2
  // Roots of delta(x) + delta(pi - d_star - x) = d_star / 2, sigma < lambda;
  // present whenever the equation has two roots (k >= 4).
  std::optional<double> sigma;
  std::optional<double> lambda;

  double diameter() const { return kPi - d_star; }
};

KStarSolution solve_k_star(int k);

// k equal chords of length a*_k whose region rectangles tile the strip; the
// first rectangle of shortcut j starts at theta = j pi / k.
Configuration uniform_config(int k);

// Six diameters at rotations j pi / 6.
Configuration six_config();

struct EightSolution {
  double a_long = 0.0;   // six shortcuts
  double a_short = 0.0;  // two shortcuts
  double d_star = 0.0;

  double diameter() const { return kPi - d_star; }
};

// Largest d_star with a_short = pi/2 - d_star, a_long + delta(a_long) = pi - d_star
// and delta(a_long) + delta(a_short) = d_star.
EightSolution solve_eight();

// Two short chords whose top rectangles cover theta in [0, pi] and six long
// chords whose top rectangles cover [pi, 2 pi]; the bottom rectangles fill the
// complementary bands. Verified with the strip cover check.
Configuration eight_config();

// Candidate placements tried by eight_config(), in order.
std::vector<Configuration> eight_placements(const EightSolution& sol);

struct AsymptoticConfig {
  Configuration config;
  int m = 0;
  std::size_t points = 0;
  std::size_t family1 = 0;
  struct Family {
    int t = 0;
    double spacing_bound = 0.0;  // Delta = (t/m)^2 / 12
    std::size_t count = 0;
  };
  std::vector<Family> family2;
  std::size_t family2_total = 0;

  std::size_t total() const { return family1 + family2_total; }
};

// Diameter <= 2 + 1/m: all near-antipodal pairs of ceil(4 pi m) uniform points,
// plus for every t in (4 sqrt m, 2m) chords of arc pi - t/m spaced at most Delta apart.
AsymptoticConfig asymptotic_config(int m);

}  // namespace circ
