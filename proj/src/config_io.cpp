#include "circ/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "circ/errors.hpp"

namespace circ {

namespace {

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("not a number: '" + text + "'");
  return x;
}

}  // namespace

double parse_angle(const std::string& text) {
  if (text.empty()) throw ParseError("empty angle");
  if (text.size() < 2 || text.compare(text.size() - 2, 2, "pi") != 0) return parse_number(text);

  std::string coef = text.substr(0, text.size() - 2);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  if (coef.empty() || coef == "+") return kPi;
  if (coef == "-") return -kPi;
  const auto slash = coef.find('/');
  if (slash == std::string::npos) return parse_number(coef) * kPi;
  const double den = parse_number(coef.substr(slash + 1));
  if (den == 0.0) throw ParseError("zero denominator in '" + text + "'");
  return parse_number(coef.substr(0, slash)) / den * kPi;
}

std::string config_to_json(const Configuration& config) {
  nlohmann::ordered_json j;
  j["version"] = kConfigVersion;
  j["label"] = config.label;
  j["provenance"] = config.provenance;
  if (config.target_detour) j["dstar"] = *config.target_detour;
  j["shortcuts"] = nlohmann::ordered_json::array();
  for (const auto& s : config.shortcuts) j["shortcuts"].push_back({{"u", s.u().value()}, {"v", s.v().value()}});
  return j.dump(2) + "\n";
}

Configuration config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("configuration must be a JSON object");
  const int version = j.value("version", 0);
  if (version < 1 || version > kConfigVersion) throw ParseError("unsupported configuration version " + std::to_string(version));
  if (!j.contains("shortcuts") || !j["shortcuts"].is_array()) throw ParseError("missing 'shortcuts' array");

  Configuration c;
  c.label = j.value("label", std::string{});
  c.provenance = j.value("provenance", std::string{});
  if (j.contains("dstar")) {
    if (!j["dstar"].is_number()) throw ParseError("'dstar' must be a number");
    c.target_detour = j["dstar"].get<double>();
  }
  for (const auto& e : j["shortcuts"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e["u"].is_number() || !e["v"].is_number())
      throw ParseError("each shortcut needs numeric 'u' and 'v'");
    c.shortcuts.push_back(Shortcut::from_endpoints(Angle(e["u"].get<double>()), Angle(e["v"].get<double>())));
  }
  return c;
}

void save_config(const std::string& path, const Configuration& config) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << config_to_json(config);
}

Configuration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

}  // namespace circ
