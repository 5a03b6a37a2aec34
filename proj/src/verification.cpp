#include "circ/verification.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "circ/angle.hpp"
#include "circ/chord.hpp"
#include "circ/strip.hpp"
#include "circ/synthesis.hpp"

namespace circ {

bool CheckInequality::holds() const {
  if (relation == "<") return lhs < rhs;
  if (relation == ">") return lhs > rhs;
  if (relation == "<=") return lhs <= rhs;
  if (relation == ">=") return lhs >= rhs;
  return false;
}

namespace {

using Values = std::vector<CheckValue>;

double d(double a) { return detour_gain(a); }

CheckInequality lt(double lhs, double rhs) { return {lhs, "<", rhs}; }
CheckInequality gt(double lhs, double rhs) { return {lhs, ">", rhs}; }
CheckInequality ge(double lhs, double rhs) { return {lhs, ">=", rhs}; }
CheckInequality le(double lhs, double rhs) { return {lhs, "<=", rhs}; }

// Appends lines of one block, numbering them block:1, block:2, ...
class Block {
 public:
  Block(std::vector<CheckLine>& out, std::string name, double tol = kPrintedTolerance)
      : out_(out), name_(std::move(name)), tol_(tol) {}

  void line(std::string expr, Values values, std::optional<CheckInequality> ineq = std::nullopt) {
    CheckLine c;
    c.block = name_;
    c.id = name_ + ":" + std::to_string(++n_);
    c.expression = std::move(expr);
    c.values = std::move(values);
    c.inequality = std::move(ineq);
    c.tolerance = tol_;
    c.pass = true;
    for (const auto& v : c.values)
      if (!(std::abs(v.computed - v.expected) <= c.tolerance)) c.pass = false;
    if (c.inequality && !c.inequality->holds()) c.pass = false;
    out_.push_back(std::move(c));
  }

 private:
  std::vector<CheckLine>& out_;
  std::string name_;
  double tol_;
  int n_ = 0;
};

struct Printed {
  double a_star, d_star, diam, mu, sigma, lambda;
};

}  // namespace

std::vector<CheckLine> appendix_report() {
  std::vector<CheckLine> out;
  KStarSolution sol[7];
  for (int k = 2; k <= 6; ++k) sol[k] = solve_k_star(k);
  const double ds = sol[6].d_star;
  const double sigma6 = *sol[6].sigma;
  const double lambda6 = *sol[6].lambda;

  {
    Block b(out, "Lemma 4");
    b.line("delta(delta(2)) = 0.00402", {{"delta(delta(2))", d(d(2.0)), 0.00402}});
  }

  const Printed table1[7] = {{},
                             {},
                             {1.4782, 0.0926, 3.0490, 1.2219, 0, 0},
                             {1.8435, 0.2509, 2.8907, 1.5943, 0, 0},
                             {1.9619, 0.3943, 2.7473, 1.7623, 1.0373, 1.7100},
                             {1.9969, 0.5164, 2.6252, 1.8526, 0.7862, 1.8390},
                             {2.0000, 0.5708, 2.5708, 1.8828, 0.6957, 1.8751}};
  {
    Block b(out, "Table 1");
    for (int k = 2; k <= 6; ++k) {
      const auto& s = sol[k];
      const auto& p = table1[k];
      b.line("k = " + std::to_string(k) + ": a*, d*, pi - d*, mu",
             {{"a*", s.a_star, p.a_star}, {"d*", s.d_star, p.d_star}, {"pi - d*", s.diameter(), p.diam}, {"mu", s.mu, p.mu}});
    }
  }

  {
    const auto& s = sol[3];
    Block b(out, "Lemma 10 for k = 3");
    b.line("a* = 1.8435, d* = 0.2509, mu = 1.5943", {{"a*", s.a_star, 1.8435}, {"d*", s.d_star, 0.2509}, {"mu", s.mu, 1.5943}});
    b.line("(i) (pi - d*)/2 = 1.4454", {{"(pi - d*)/2", 0.5 * (kPi - s.d_star), 1.4454}});
    b.line("(v) delta(1.45) = 0.0860", {{"delta(1.45)", d(1.45), 0.0860}});
    b.line("(vi) delta(pi/2) = 0.1179", {{"delta(pi/2)", d(kPi / 2), 0.1179}});
    b.line("(vii) a such that delta(a) = 0.06 = 1.3150", {{"a", inverse_detour(0.06), 1.3150}});
  }

  {
    Block b(out, "Table 2 (in Lemma 11)");
    for (int k = 4; k <= 6; ++k) {
      const auto& s = sol[k];
      const auto& p = table1[k];
      b.line("k = " + std::to_string(k) + ": a*, d*, mu, sigma, lambda",
             {{"a*", s.a_star, p.a_star},
              {"d*", s.d_star, p.d_star},
              {"mu", s.mu, p.mu},
              {"sigma", *s.sigma, p.sigma},
              {"lambda", *s.lambda, p.lambda}});
    }
  }

  // delta^ = d*_k - 2 (k-3) delta(sigma_k)
  const double printed_dhat[7] = {0, 0, 0, 0, 0.3411, 0.4728, 0.5262};
  const double printed_w_l[7] = {0, 0, 0, 0, 1.0906, 0.8298, 0.7403};
  const double printed_kw_l[7] = {0, 0, 0, 0, 2.1811, 2.4894, 2.9610};
  double dhat[7] = {};
  {
    Block b(out, "Lemma 10 for k in {4, 5, 6}");
    for (int k = 4; k <= 6; ++k) {
      const auto& s = sol[k];
      const auto& p = table1[k];
      dhat[k] = s.d_star - 2.0 * (k - 3) * d(*s.sigma);
      const double w = kPi - *s.lambda - dhat[k];
      const std::string ks = "k = " + std::to_string(k) + ": ";
      b.line(ks + "d*, sigma, lambda", {{"d*", s.d_star, p.d_star}, {"sigma", *s.sigma, p.sigma}, {"lambda", *s.lambda, p.lambda}});
      b.line(ks + "delta^, w = (pi - lambda - d^)", {{"delta^", dhat[k], printed_dhat[k]}, {"w", w, printed_w_l[k]}});
      b.line(ks + "(k-2) w < pi", {{"(k-2) w", (k - 2) * w, printed_kw_l[k]}}, lt((k - 2) * w, kPi));
    }
  }

  {
    const double printed_ahat[7] = {0, 0, 0, 0, 1.9304, 1.9893, 1.9979};
    const double printed_w[7] = {0, 0, 0, 0, 0.8701, 0.6795, 0.6174};
    const double printed_kw[7] = {0, 0, 0, 0, 2.6103, 2.7178, 3.0872};
    Block b(out, "The final contradiction of Lemma 10");
    for (int k = 4; k <= 6; ++k) {
      const double ahat = inverse_detour(dhat[k]);
      const double w = kPi - ahat - dhat[k];
      const std::string ks = "k = " + std::to_string(k) + ": ";
      b.line(ks + "delta^, a^, w = pi - a^ - delta^",
             {{"delta^", dhat[k], printed_dhat[k]}, {"a^", ahat, printed_ahat[k]}, {"w", w, printed_w[k]}});
      b.line(ks + "(k-1) w < pi", {{"(k-1) w", (k - 1) * w, printed_kw[k]}}, lt((k - 1) * w, kPi));
    }
  }

  {
    const double printed_w[6] = {0, 0, 0, 1.2964, 0.9850, 0.7726};
    const double printed_kw[6] = {0, 0, 0, 2.5928, 2.9549, 3.0902};
    Block b(out, "Lemma 12");
    for (int k = 3; k <= 5; ++k) {
      const auto& s = sol[k];
      const double w = kPi - s.mu - s.d_star;
      b.line("k = " + std::to_string(k) + ": mu, w = pi - mu - d*, (k-1) w < pi",
             {{"mu", s.mu, table1[k].mu}, {"w", w, printed_w[k]}, {"(k-1) w", (k - 1) * w, printed_kw[k]}},
             lt((k - 1) * w, kPi));
    }
  }

  {
    const auto& s = sol[6];
    const double w = kPi - s.mu - ds;
    const double hat = ds - 0.016;
    const double ahat = inverse_detour(hat);
    Block b(out, "Theorem 14 for k = 6");
    b.line("mu, d*, w = pi - mu - d*", {{"mu", s.mu, 1.8828}, {"d*", ds, 0.5708}, {"w", w, 0.6880}});
    b.line("4 w < pi", {{"4 w", 4 * w, 2.7518}}, lt(4 * w, kPi));
    b.line("pi - d* + 5 w < 2pi", {{"pi - d* + 5 w", kPi - ds + 5 * w, 6.0106}}, lt(kPi - ds + 5 * w, kTwoPi));
    b.line("delta(pi - d* - mu) = 0.0072", {{"delta(pi - d* - mu)", d(kPi - ds - s.mu), 0.0072}});
    b.line("d^ = d* - 0.016, a^ with delta(a^) = d^", {{"d^", hat, 0.5548}, {"a^", ahat, 1.9997}});
    b.line("5 (pi - a^ - d^) < pi", {{"5 (pi - a^ - d^)", 5 * (kPi - ahat - hat), 2.9353}}, lt(5 * (kPi - ahat - hat), kPi));
  }

  // delta^(l) = d* - 2 l delta(sigma6)
  const auto dhat_l = [&](int l) { return ds - 2.0 * l * d(sigma6); };
  {
    Block b(out, "Lemma 16");
    b.line("d*, sigma6, delta(sigma6)", {{"d*", ds, 0.5708}, {"sigma6", sigma6, 0.6957}, {"delta(sigma6)", d(sigma6), 0.0074}});
    b.line("d^(4), 2 delta(1.849)", {{"d^(4)", dhat_l(4), 0.5114}, {"2 delta(1.849)", 2 * d(1.849), 0.5104}});
    const double w4 = kPi - 1.849 - dhat_l(4);
    b.line("w = pi - 1.849 - d^(4)", {{"w", w4, 0.7812}});
    b.line("4 * w < pi", {{"4 w", 4 * w4, 3.1248}}, lt(4 * w4, kPi));
    b.line("d^(2) > d5*", {{"d^(2)", dhat_l(2), 0.5411}, {"d5*", sol[5].d_star, 0.5164}}, gt(dhat_l(2), sol[5].d_star));
    b.line("d^(1) = 0.5559", {{"d^(1)", dhat_l(1), 0.5559}});
    const double w1 = kPi - lambda6 - dhat_l(1);
    b.line("w = pi - lambda6 - d^(1)", {{"w", w1, 0.7105}});
    b.line("4 * w < pi", {{"4 w", 4 * w1, 2.8422}}, lt(4 * w1, kPi));
  }

  {
    Block b(out, "Lemma 17");
    b.line("1.7 + lambda6 > pi", {{"1.7 + lambda6", 1.7 + lambda6, 3.5751}}, gt(1.7 + lambda6, kPi));
    b.line("delta(1.999) < 0.54", {{"delta(1.999)", d(1.999), 0.5397}}, lt(d(1.999), 0.54));
    const double w1 = kPi - 1.999 - 0.54;
    const double w2 = kPi - lambda6 - 0.54;
    const double w3 = kPi - 1.7 - 0.54;
    b.line("w1 = pi - 1.999 - 0.54", {{"w1", w1, 0.6026}});
    b.line("w2 = pi - lambda6 - 0.54", {{"w2", w2, 0.7265}});
    b.line("w3 = pi - 1.7 - 0.54", {{"w3", w3, 0.9016}});
    b.line("w3 + 2 * w2 + 6 * w1 < 2pi", {{"sum", w3 + 2 * w2 + 6 * w1, 5.9701}}, lt(w3 + 2 * w2 + 6 * w1, kTwoPi));
    b.line("2 * w2 + 8 * w1 < 2pi", {{"sum", 2 * w2 + 8 * w1, 6.2737}}, lt(2 * w2 + 8 * w1, kTwoPi));
  }

  {
    const double hat = ds - 2 * d(sigma6);
    const double s3 = 0.8 * kPi - hat;
    const double area_l = region_area(lambda6, hat);
    const double bound_s3 = 4 * d(s3) * (kPi - s3 - hat);
    const double bound_1999 = 4 * hat * (kPi - 1.999 - hat);
    const double total = area_l + bound_s3 + 4 * bound_1999;
    Block b(out, "Lemma 18");
    b.line("d^ = d* - 2 * delta(sigma6)", {{"d^", hat, 0.5559}});
    b.line("s3 <= 0.8 * pi - d^", {{"0.8 pi - d^", s3, 1.9573}});
    b.line("A(lambda6, d^) = 4 * delta(lambda6) * (pi - lambda6 - d^)",
           {{"A(lambda6, d^)", area_l, 0.7900}, {"4 delta(lambda6) (pi - lambda6 - d^)", 4 * d(lambda6) * (kPi - lambda6 - hat), 0.7900}});
    b.line("A(s3, d^) <= 4 * delta(1.9573) * (pi - 1.9573 - d^)",
           {{"bound", bound_s3, 0.9681}}, le(region_area(s3, hat), bound_s3));
    b.line("delta(1.999) < d^", {{"delta(1.999)", d(1.999), 0.53967}}, lt(d(1.999), hat));
    b.line("A(1.999, d^) < 4 * d^ * (pi - 1.999 - d^)", {{"bound", bound_1999, 1.3046}},
           lt(region_area(1.999, hat), bound_1999));
    b.line("0.7900 + 0.9681 + 4 * 1.3046 < 4 * d^ * pi", {{"sum", total, 6.9765}, {"4 d^ pi", 4 * hat * kPi, 6.9862}},
           lt(total, 4 * hat * kPi));
  }

  {
    Block b(out, "Lemma 19");
    b.line("0.4 - d*/2, 0.4 + d*/2", {{"0.4 - d*/2", 0.4 - ds / 2, 0.1146}, {"0.4 + d*/2", 0.4 + ds / 2, 0.6854}});
  }

  {
    const double w = kPi - 1.999 - ds;
    Block b(out, "Final contradiction of Section 4.2.1 (a short shortcut exists)");
    b.line("pi - 1.999 - d*", {{"pi - 1.999 - d*", w, 0.5718}});
    b.line("pi - 2 * 0.4 > 4 * (pi - 1.999 - d*)", {{"pi - 0.8", kPi - 0.8, 2.3416}, {"4 w", 4 * w, 2.2872}},
           gt(kPi - 0.8, 4 * w));
    b.line("0.4 + d*/2 > pi - 1.999 - d*", {{"0.4 + d*/2", 0.4 + ds / 2, 0.6854}}, gt(0.4 + ds / 2, w));
  }

  {
    const double sum = 5 * kPi - 7 * ds - 5 * lambda6;
    Block b(out, "Lemma 20");
    b.line("s1 + s2 <= 5 * pi - 7 * ds - 5 * lambda6 < 2.34", {{"bound", sum, 2.3369}}, lt(sum, 2.34));
    const double v2 = d(sigma6) + d(2.34 - sigma6);
    b.line("delta(sigma6) + delta(2.34 - sigma6) < 0.2", {{"sum", v2, 0.1505}}, lt(v2, 0.2));
    const double v3 = d(0.83) + d(kPi / 2 + 1 - 0.83);
    b.line("delta(0.83) + delta(pi/2 + 1 - 0.83) < 0.2", {{"sum", v3, 0.1986}}, lt(v3, 0.2));
    const double v4 = d(0.83) + d(1.7);
    b.line("delta(0.83) + delta(1.7) < 0.2", {{"sum", v4, 0.1789}}, lt(v4, 0.2));
    b.line("1.999 + sigma6 > pi - d*", {{"1.999 + sigma6", 1.999 + sigma6, 2.6947}, {"pi - d*", kPi - ds, 2.5708}},
           gt(1.999 + sigma6, kPi - ds));
  }

  {
    const double zeta = kPi / 2 - 1.4;
    const double w = kPi - 1.949 - ds;
    Block b(out, "Final contradiction of Section 4.2.2 (no short shortcut)");
    b.line("zeta = pi/2 - 1.4", {{"zeta", zeta, 0.1708}});
    b.line("pi - lambda6 - d*", {{"pi - lambda6 - d*", kPi - lambda6 - ds, 0.6957}});
    b.line("2 * delta(1.949) < d* + zeta", {{"2 delta(1.949)", 2 * d(1.949), 0.7400}, {"d* + zeta", ds + zeta, 0.7416}},
           lt(2 * d(1.949), ds + zeta));
    b.line("pi - 1.949 - d*", {{"pi - 1.949 - d*", w, 0.6218}});
    // 0.622 is the script's rounded-up stand-in for w; w <= 0.622 keeps the bound valid.
    b.line("5 * 2 * 0.622 < 2pi (0.622 >= pi - 1.949 - d*)", {{"5 * 2 * 0.622", 10 * 0.622, 6.2200}},
           lt(10 * std::max(0.622, w), kTwoPi));
  }

  return out;
}

std::vector<CheckLine> check_eight_constants() {
  std::vector<CheckLine> out;
  const EightSolution e = solve_eight();
  Block b(out, "Eight shortcuts", kEightTolerance);
  b.line("a1, a2, d*", {{"a1", e.a_long, 1.999870869}, {"a2", e.a_short, 0.988571799}, {"d*", e.d_star, 0.5822245291}});
  b.line("pi - d* = 2.559368125", {{"pi - d*", e.diameter(), 2.559368125}});
  b.line("delta(a1) + delta(a2) = d*", {{"delta(a1) + delta(a2) - d*", d(e.a_long) + d(e.a_short) - e.d_star, 0.0}});
  b.line("a1 + delta(a1) = pi - d*", {{"a1 + delta(a1) - (pi - d*)", e.a_long + d(e.a_long) - (kPi - e.d_star), 0.0}});
  return out;
}

std::vector<CheckLine> check_area_lemma() {
  std::vector<CheckLine> out;
  const auto h = [](double x) { return x * x + 1.2 * x - 2.0 + 2.0 * std::pow(1.0 - x * x, 1.5); };
  const auto g = [](double x) { return (1.2 - x) / std::sqrt(1.0 - x * x) + 2.0 * x - 1.2 - std::asin(x); };
  Block b(out, "Area lemma");
  b.line("h(1/2) > 0", {{"h(1/2)", h(0.5), 0.25 + 0.6 - 2.0 + 2.0 * std::pow(0.75, 1.5)}}, gt(h(0.5), 0.0));
  b.line("g(0) = 0", {{"g(0)", g(0.0), 0.0}});
  constexpr int kGrid = 10000;
  double gmin = INFINITY;
  for (int i = 1; i < kGrid; ++i) gmin = std::min(gmin, g(static_cast<double>(i) / kGrid));
  b.line("min g over (0, 1) grid > 0", {}, gt(gmin, 0.0));

  for (double dstar : {0.1, 0.3, 0.5, 0.7}) {
    const double a_star = dstar > kMaxDetour ? kMaxChord : inverse_detour(dstar);
    int bad = 0;
    double prev = region_area(kMaxChord / kGrid, dstar);
    for (int i = 2; i <= kGrid; ++i) {
      const double a_prev = kMaxChord * (i - 1) / kGrid;
      const double a = kMaxChord * i / kGrid;
      const double cur = region_area(a, dstar);
      // increasing up to a*, decreasing after; the step straddling a* says nothing
      if (a <= a_star && cur < prev) ++bad;
      if (a_prev >= a_star && cur > prev) ++bad;
      prev = cur;
    }
    std::ostringstream expr;
    expr << "A(., " << dstar << ") increasing up to a* and decreasing after";
    b.line(expr.str(), {{"violations", static_cast<double>(bad), 0.0}});
  }
  return out;
}

std::vector<CheckLine> check_asymptotic_inequalities(int m) {
  std::vector<CheckLine> out;
  if (m < 4) return out;
  const double md = m;
  Block b(out, "Asymptotic m = " + std::to_string(m));

  const double qr = 2 * std::sin(1 / md);
  const double taylor = 2 / md - (2.0 / 6.0) / (md * md * md);
  b.line("2 sin(1/m) >= 2/m - (2/3!)/m^3", {}, ge(qr, taylor));
  b.line("2/m - (2/3!)/m^3 > 5/(3m)", {}, gt(taylor, 5 / (3 * md)));

  const int t_hi = static_cast<int>(std::floor(std::sqrt(md) + 1e-9)) - 2;
  for (int t = 0; t <= t_hi; ++t) {
    const double pr = 2 * std::cos((t + 2) / (2 * md));
    const std::string ts = "t = " + std::to_string(t) + ": ";
    b.line(ts + "2 cos((t+2)/(2m)) >= 2 - 1/(4m)", {}, ge(pr, 2 - 1 / (4 * md)));
    b.line(ts + "|pr| + |rq| > 2 + 1/m", {}, gt(pr + qr, 2 + 1 / md));
  }

  const int t_lo = static_cast<int>(std::floor(4 * std::sqrt(md) + 1e-9)) + 1;
  for (int t = t_lo; t <= 2 * m - 1; ++t) {
    const double r = t / md;
    const double s = 2 * std::cos(t / (2 * md));
    const double delta = r * r / 12;
    const std::string ts = "t = " + std::to_string(t) + ": ";
    b.line(ts + "2 cos(t/(2m)) <= 2 - (11/48)(t/m)^2", {}, le(s, 2 - 11.0 / 48.0 * r * r));
    b.line(ts + "2 - (11/48)(t/m)^2 < 2 - 2 Delta", {}, lt(2 - 11.0 / 48.0 * r * r, 2 - 2 * delta));
    b.line(ts + "Delta > 1/m", {}, gt(delta, 1 / md));
  }
  return out;
}

bool all_pass(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

std::string format_report(const std::vector<CheckLine>& lines) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "Recomputed calculations. Only the arithmetic is checked; the case\n"
     << "analyses and contradictions built on it are not encoded.\n";
  std::string block;
  std::size_t passed = 0;
  for (const auto& l : lines) {
    if (l.block != block) {
      block = l.block;
      os << "\n" << block << ":\n" << std::string(block.size() + 1, '=') << "\n";
    }
    os << (l.pass ? "[pass] " : "[FAIL] ") << l.id << "  " << l.expression << "\n";
    for (const auto& v : l.values)
      os << "         " << v.name << " = " << v.computed << "  (printed " << v.expected << ", |diff| "
         << std::abs(v.computed - v.expected) << ")\n";
    if (l.inequality)
      os << "         " << l.inequality->lhs << " " << l.inequality->relation << " " << l.inequality->rhs << "\n";
    if (l.pass) ++passed;
  }
  os << "\n" << passed << "/" << lines.size() << " pass\n";
  return os.str();
}

std::string format_report_json(const std::vector<CheckLine>& lines) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : lines) {
    nlohmann::json j;
    j["block"] = l.block;
    j["id"] = l.id;
    j["expression"] = l.expression;
    j["tolerance"] = l.tolerance;
    j["verdict"] = l.pass ? "pass" : "fail";
    j["values"] = nlohmann::json::array();
    for (const auto& v : l.values) j["values"].push_back({{"name", v.name}, {"computed", v.computed}, {"expected", v.expected}});
    if (l.inequality)
      j["inequality"] = {{"lhs", l.inequality->lhs}, {"relation", l.inequality->relation}, {"rhs", l.inequality->rhs}};
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace circ
