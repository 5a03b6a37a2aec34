#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circ/angle.hpp"
#include "circ/chord.hpp"

namespace circ {

struct Configuration {
  std::vector<Shortcut> shortcuts;
  std::string label;
  std::string provenance;
  // Half-height of the strip the configuration was built for, if any.
  std::optional<double> target_detour;

  std::size_t size() const { return shortcuts.size(); }
};

struct Leg {
  enum class Kind { arc, shortcut };
  Kind kind = Kind::arc;
  Angle from;
  Angle to;
  double length = 0.0;
  // Index into Configuration::shortcuts for shortcut legs, -1 for arcs.
  int shortcut = -1;
  // Arc legs: true when walked counter-clockwise.
  bool ccw = true;
};

struct PathWitness {
  double total = 0.0;
  std::vector<Leg> legs;

  std::size_t shortcut_count() const;
  std::vector<int> shortcuts_used() const;
};

struct DistanceResult {
  double length = 0.0;
  PathWitness witness;
};

// Tolerance under which two path lengths count as a tie; ties go to the path
// with fewer shortcut legs.
inline constexpr double kTieTolerance = 1e-12;

// Shortest path between p and q over circle arcs and whole chords.
DistanceResult distance(const Configuration& config, Angle p, Angle q);

// d_{s}(p, q): the better of the two arcs and the two ways through s.
double single_shortcut_distance(const Shortcut& s, Angle p, Angle q);

struct DiameterBound {
  double lo = 0.0;
  double hi = 0.0;
  Angle p;
  Angle q;
  double step = 0.0;
  std::size_t candidates = 0;
};

struct DiameterOptions {
  double step = 1e-3;
  // Add endpoints, their antipodes, and umbra / deep-umbra boundaries of every
  // shortcut to the uniform mesh.
  bool feature_points = true;
};

// Sorted, de-duplicated candidate points used by the diameter search.
std::vector<double> diameter_candidates(const Configuration& config, const DiameterOptions& options);

// Certified diameter interval: lo is the largest distance over all candidate
// pairs (a realized distance) and hi = lo + 2*step. Parallel over sources.
DiameterBound diameter_bounds(const Configuration& config, const DiameterOptions& options = {});

namespace reference {

// Serial brute force over the same candidate pairs using distance().
DiameterBound diameter_bounds_serial(const Configuration& config, const DiameterOptions& options = {});

}  // namespace reference

}  // namespace circ
