// circ: command-line front end for the circle-shortcut library.
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "circ/config_io.hpp"
#include "circ/errors.hpp"
#include "circ/metric.hpp"
#include "circ/strip.hpp"
#include "circ/svg.hpp"
#include "circ/synthesis.hpp"
#include "circ/verification.hpp"

using namespace circ;

namespace {

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParseError("not an integer: '" + text + "'");
  return v;
}

void print_legs(std::ostream& os, const PathWitness& w) {
  os << "legs = " << w.legs.size() << " (" << w.shortcut_count() << " shortcut)\n";
  for (const Leg& l : w.legs) {
    if (l.kind == Leg::Kind::shortcut)
      os << "  shortcut #" << l.shortcut << "  ";
    else
      os << "  arc " << (l.ccw ? "ccw" : "cw ") << "      ";
    os << l.from.value() << " -> " << l.to.value() << "  length " << l.length << "\n";
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

int cmd_solve(const std::string& k_text) {
  const int k = parse_int(k_text);
  if (k == 8) {
    const EightSolution e = solve_eight();
    std::cout << "a1 = " << e.a_long << "\n"
              << "a2 = " << e.a_short << "\n"
              << "d* = " << e.d_star << "\n"
              << "pi - d* = " << e.diameter() << "\n";
    return 0;
  }
  const KStarSolution s = solve_k_star(k);
  std::cout << "k = " << s.k << "\n"
            << "a* = " << s.a_star << "\n"
            << "d* = " << s.d_star << "\n"
            << "pi - d* = " << s.diameter() << "\n"
            << "mu = " << s.mu << "\n";
  if (s.sigma) std::cout << "sigma = " << *s.sigma << "\n";
  if (s.lambda) std::cout << "lambda = " << *s.lambda << "\n";
  return 0;
}

Configuration make_config(const std::string& what, int m) {
  if (what == "asym") {
    if (m <= 0) throw DomainError("make asym needs m");
    return asymptotic_config(m).config;
  }
  const int k = parse_int(what);
  if (k >= 2 && k <= 5) return uniform_config(k);
  if (k == 6) return six_config();
  if (k == 8) return eight_config();
  throw DomainError("no construction for k = " + what + " (use 2, 3, 4, 5, 6, 8 or asym)");
}

int cmd_diam(const std::string& file, double step, bool no_features, bool serial) {
  const Configuration c = load_config(file);
  const DiameterOptions opt{step, !no_features};
  const DiameterBound b = serial ? reference::diameter_bounds_serial(c, opt) : diameter_bounds(c, opt);
  std::cout << "lo = " << b.lo << "\n"
            << "hi = " << b.hi << "\n"
            << "p = " << b.p.value() << "\n"
            << "q = " << b.q.value() << "\n"
            << "step = " << b.step << "\n"
            << "candidates = " << b.candidates << "\n";
  print_legs(std::cout, distance(c, b.p, b.q).witness);
  return 0;
}

int cmd_dist(const std::string& file, const std::string& p, const std::string& q) {
  const Configuration c = load_config(file);
  const DistanceResult r = distance(c, Angle(parse_angle(p)), Angle(parse_angle(q)));
  std::cout << "distance = " << r.length << "\n";
  print_legs(std::cout, r.witness);
  return 0;
}

int cmd_cover(const std::string& file, const std::string& dstar_text) {
  const Configuration c = load_config(file);
  const double dstar = parse_angle(dstar_text);
  const auto rects = region_rectangles(c.shortcuts, dstar);
  const CoverResult r = covers_strip(rects, dstar);
  std::cout << "rectangles = " << rects.size() << "\n"
            << "covered = " << (r.covered ? "yes" : "no") << "\n";
  if (r.gap)
    std::cout << "gap at theta = " << r.gap->theta << ", xi = " << r.gap->xi << " (uncovered length " << r.gap_length
              << " on that line)\n";
  return r.covered ? 0 : 1;
}

int cmd_verify(bool extended, bool json) {
  std::vector<CheckLine> lines = appendix_report();
  if (extended) {
    for (auto&& part : {check_eight_constants(), check_area_lemma(), check_asymptotic_inequalities(16)})
      lines.insert(lines.end(), part.begin(), part.end());
  }
  std::cout << (json ? format_report_json(lines) + "\n" : format_report(lines));
  return all_pass(lines) ? 0 : 1;
}

int cmd_render(const std::string& kind, const std::string& file, const std::string& out, const std::string& dstar_text) {
  const Configuration c = load_config(file);
  if (kind == "circle") {
    write_output(out, render_circle(c));
    return 0;
  }
  double dstar = 0.0;
  if (!dstar_text.empty())
    dstar = parse_angle(dstar_text);
  else if (c.target_detour)
    dstar = *c.target_detour;
  else
    throw DomainError("render strip needs --dstar (the configuration has none)");
  write_output(out, render_strip(c, dstar));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::setprecision(10);
  CLI::App app{"Shortcuts on the unit circle: constructions, distances, diameters, checks"};
  app.require_subcommand(1);

  std::string k_text;
  auto* solve = app.add_subcommand("solve", "Solve for a*, d*, mu (and sigma, lambda) for k shortcuts; k = 8 for the eight-shortcut constants");
  solve->add_option("k", k_text)->required();

  std::string make_what, out_path;
  int make_m = 0;
  auto* make = app.add_subcommand("make", "Write a configuration document: k in {2,3,4,5,6,8}, or 'asym m'");
  make->add_option("what", make_what)->required();
  make->add_option("m", make_m);
  make->add_option("-o,--output", out_path);

  std::string file;
  double step = 1e-3;
  bool no_features = false, serial = false;
  auto* diam = app.add_subcommand("diam", "Certified diameter bounds on a grid");
  diam->add_option("file", file)->required();
  diam->add_option("--step", step)->check(CLI::PositiveNumber);
  diam->add_flag("--no-features", no_features, "Uniform grid only");
  diam->add_flag("--serial", serial, "Use the serial reference kernel");

  std::string p_text, q_text;
  auto* dist = app.add_subcommand("dist", "Distance between two points, with a witness path");
  dist->add_option("file", file)->required();
  dist->add_option("p", p_text)->required();
  dist->add_option("q", q_text)->required();

  std::string dstar_text;
  auto* cover = app.add_subcommand("cover", "Check that the region rectangles cover the strip");
  cover->add_option("file", file)->required();
  cover->add_option("dstar", dstar_text)->required();

  bool extended = false, json = false;
  auto* verify = app.add_subcommand("verify", "Recompute the appendix calculations");
  verify->add_flag("--extended", extended, "Also check the eight-shortcut constants, the area lemma and the asymptotic bounds");
  verify->add_flag("--json", json);

  std::string render_kind;
  auto* render = app.add_subcommand("render", "SVG drawing of the circle or of the strip");
  render->add_option("kind", render_kind)->required()->check(CLI::IsMember({"circle", "strip"}));
  render->add_option("file", file)->required();
  render->add_option("-o,--output", out_path);
  render->add_option("--dstar", dstar_text);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(k_text);
    if (*make) {
      write_output(out_path, config_to_json(make_config(make_what, make_m)));
      return 0;
    }
    if (*diam) return cmd_diam(file, step, no_features, serial);
    if (*dist) return cmd_dist(file, p_text, q_text);
    if (*cover) return cmd_cover(file, dstar_text);
    if (*verify) return cmd_verify(extended, json);
    if (*render) return cmd_render(render_kind, file, out_path, dstar_text);
  } catch (const std::exception& e) {
    std::cerr << "circ: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
