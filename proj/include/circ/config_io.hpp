#pragma once

#include <string>

#include "circ/metric.hpp"

namespace circ {

inline constexpr int kConfigVersion = 1;

// Decimal radians ("1.25", "-3e-1") or multiples of pi ("0.5pi", "pi", "-2/3pi").
double parse_angle(const std::string& text);

// JSON document: {version, label, provenance, dstar?, shortcuts: [{u, v}, ...]}.
// Doubles are written in shortest round-trip form, so reading back is bit-exact.
std::string config_to_json(const Configuration& config);
Configuration config_from_json(const std::string& text);

void save_config(const std::string& path, const Configuration& config);
Configuration load_config(const std::string& path);

}  // namespace circ
