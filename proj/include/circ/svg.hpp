#pragma once

#include <string>

#include "circ/metric.hpp"

namespace circ {

inline constexpr int kCircleCanvas = 800;
inline constexpr int kStripWidth = 1200;
inline constexpr int kStripHeight = 300;

// Fill colour of shortcut i; fixed so that drawings are reproducible.
const char* shortcut_color(std::size_t i);

// Unit circle with every shortcut drawn as a chord, endpoints marked.
std::string render_circle(const Configuration& config);

// The strip [0, 2pi] x [-dstar, dstar]: one <g class="region"> per region
// rectangle (split in two <rect>s when it wraps past 2pi), midline, boundaries,
// and uncovered cells as <rect class="gap">.
std::string render_strip(const Configuration& config, double dstar);

}  // namespace circ
