#include "circ/svg.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "circ/strip.hpp"

namespace circ {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// Pieces narrower than this (in radians) are rounding debris of a wrap.
constexpr double kMinPiece = 1e-9;

std::ostringstream svg_stream(int w, int h) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
     << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  return os;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

const char* shortcut_color(std::size_t i) { return kPalette[i % kPaletteSize]; }

std::string render_circle(const Configuration& config) {
  const double c = kCircleCanvas / 2.0;
  const double r = kCircleCanvas * 0.4;
  // y grows downwards in SVG; angles go counter-clockwise on screen.
  const auto px = [&](Angle t) { return c + r * std::cos(t.value()); };
  const auto py = [&](Angle t) { return c - r * std::sin(t.value()); };

  std::ostringstream os = svg_stream(kCircleCanvas, kCircleCanvas);
  os << "<circle class=\"circle\" cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << r
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i < config.shortcuts.size(); ++i) {
    const Shortcut& s = config.shortcuts[i];
    os << "<line class=\"shortcut\" data-index=\"" << i << "\" x1=\"" << px(s.u()) << "\" y1=\"" << py(s.u())
       << "\" x2=\"" << px(s.v()) << "\" y2=\"" << py(s.v()) << "\" stroke=\"" << shortcut_color(i)
       << "\" stroke-width=\"2\"/>\n";
    for (Angle e : {s.u(), s.v()})
      os << "<circle class=\"endpoint\" cx=\"" << px(e) << "\" cy=\"" << py(e) << "\" r=\"3\" fill=\""
         << shortcut_color(i) << "\"/>\n";
  }
  if (!config.label.empty())
    os << "<text x=\"20\" y=\"30\" font-family=\"sans-serif\" font-size=\"18\">" << escape(config.label) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_strip(const Configuration& config, double dstar) {
  constexpr double margin = 30.0;
  const double w = kStripWidth - 2 * margin;
  const double h = kStripHeight - 2 * margin;
  const auto x_of = [&](double theta) { return margin + theta / kTwoPi * w; };
  const auto y_of = [&](double xi) { return margin + (dstar - xi) / (2 * dstar) * h; };

  std::ostringstream os = svg_stream(kStripWidth, kStripHeight);
  const auto rect = [&](const char* cls, double theta_lo, double width, double xi_lo, double xi_hi,
                        const char* fill, const char* extra) {
    // a rectangle wrapping past 2pi is drawn as two pieces
    const double first = std::min(width, kTwoPi - theta_lo);
    const double pieces[2][2] = {{theta_lo, first}, {0.0, width - first}};
    for (const auto& p : pieces) {
      if (p[1] < kMinPiece) continue;
      os << "<rect class=\"" << cls << "\" x=\"" << x_of(p[0]) << "\" y=\"" << y_of(xi_hi) << "\" width=\""
         << p[1] / kTwoPi * w << "\" height=\"" << (xi_hi - xi_lo) / (2 * dstar) * h << "\" fill=\"" << fill
         << "\"" << extra << "/>\n";
    }
  };

  for (std::size_t i = 0; i < config.shortcuts.size(); ++i) {
    const RegionRects rr = region_rectangles(config.shortcuts[i], dstar);
    if (rr.shape == RegionShape::empty) continue;
    for (const StripRect* r : {&rr.first, &rr.second}) {
      os << "<g class=\"region\" data-index=\"" << i << "\">\n";
      rect("piece", r->theta_lo, r->width, r->xi_lo, r->xi_hi, shortcut_color(i), " fill-opacity=\"0.45\"");
      os << "</g>\n";
    }
  }
  if (!config.shortcuts.empty()) {
    for (const StripRect& g : uncovered_cells(region_rectangles(config.shortcuts, dstar), dstar))
      rect("gap", g.theta_lo, g.width, g.xi_lo, g.xi_hi, "red", " fill-opacity=\"0.8\"");
  }

  os << "<rect class=\"strip\" x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << w << "\" height=\"" << h
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "<line class=\"midline\" x1=\"" << margin << "\" y1=\"" << y_of(0) << "\" x2=\"" << margin + w << "\" y2=\""
     << y_of(0) << "\" stroke=\"black\" stroke-dasharray=\"6 4\"/>\n";
  for (double xi : {dstar, -dstar})
    os << "<line class=\"boundary\" x1=\"" << margin << "\" y1=\"" << y_of(xi) << "\" x2=\"" << margin + w
       << "\" y2=\"" << y_of(xi) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os << "<text x=\"" << margin << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(config.label.empty() ? "strip" : config.label) << ", d* = " << std::setprecision(10) << dstar
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace circ
