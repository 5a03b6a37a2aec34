#include "circ/metric.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <omp.h>

#include "circ/errors.hpp"

namespace circ {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ChordEdge {
  int a = 0;
  int b = 0;
  double length = 0.0;
  int shortcut = -1;
};

// Finite graph behind the metric: sorted node angles with arc edges between
// circular neighbours (implicit) and one edge per chord.
struct ChordGraph {
  std::vector<double> nodes;
  std::vector<ChordEdge> edges;

  int index_of(double x) const {
    return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
  }
};

ChordGraph build_graph(const Configuration& config, std::initializer_list<double> extra) {
  ChordGraph g;
  g.nodes.reserve(2 * config.size() + extra.size());
  for (const auto& s : config.shortcuts) {
    g.nodes.push_back(s.u().value());
    g.nodes.push_back(s.v().value());
  }
  for (double x : extra) g.nodes.push_back(x);
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  g.edges.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto& s = config.shortcuts[i];
    g.edges.push_back({g.index_of(s.u().value()), g.index_of(s.v().value()), s.length(), static_cast<int>(i)});
  }
  return g;
}

double node_distance(const ChordGraph& g, int x, int y) {
  return circle_distance(Angle(g.nodes[x]), Angle(g.nodes[y]));
}

Leg arc_leg(double from, double to) {
  Leg leg;
  leg.kind = Leg::Kind::arc;
  leg.from = Angle(from);
  leg.to = Angle(to);
  const double o = ccw_offset(from, to);
  leg.ccw = o <= kPi;
  leg.length = std::min(o, kTwoPi - o);
  return leg;
}

Leg chord_leg(const ChordGraph& g, int from, int to, const ChordEdge& e) {
  Leg leg;
  leg.kind = Leg::Kind::shortcut;
  leg.from = Angle(g.nodes[from]);
  leg.to = Angle(g.nodes[to]);
  leg.length = e.length;
  leg.shortcut = e.shortcut;
  return leg;
}

// Shortest path from p to q with p <= q. Layer k holds the best lengths using
// at most k chords; the answer is read from the first layer that ties the
// converged one, so the witness uses as few shortcuts as possible.
DistanceResult ordered_distance(const Configuration& config, Angle p, Angle q) {
  const ChordGraph g = build_graph(config, {p.value(), q.value()});
  const int n = static_cast<int>(g.nodes.size());
  const int pi = g.index_of(p.value());
  const int qi = g.index_of(q.value());

  std::vector<std::vector<double>> layers;
  {
    std::vector<double> b0(n);
    for (int x = 0; x < n; ++x) b0[x] = node_distance(g, pi, x);
    layers.push_back(std::move(b0));
  }
  const std::size_t max_layers = g.edges.size() + 1;
  while (layers.size() < max_layers + 1) {
    const auto& prev = layers.back();
    std::vector<double> seed = prev;
    for (const auto& e : g.edges) {
      seed[e.b] = std::min(seed[e.b], prev[e.a] + e.length);
      seed[e.a] = std::min(seed[e.a], prev[e.b] + e.length);
    }
    std::vector<double> next(n, kInf);
    bool improved = false;
    for (int x = 0; x < n; ++x) {
      double best = seed[x];
      for (int y = 0; y < n; ++y) best = std::min(best, seed[y] + node_distance(g, y, x));
      next[x] = best;
      if (best < prev[x]) improved = true;
    }
    if (!improved) break;
    layers.push_back(std::move(next));
  }

  const double length = layers.back()[qi];
  std::size_t k = 0;
  while (layers[k][qi] > length + kTieTolerance) ++k;

  std::vector<Leg> reversed;
  int x = qi;
  while (k > 0) {
    const auto& prev = layers[k - 1];
    double best = kInf;
    int best_edge = -1;
    bool forward = true;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      const auto& edge = g.edges[e];
      const double via_ab = prev[edge.a] + edge.length + node_distance(g, edge.b, x);
      const double via_ba = prev[edge.b] + edge.length + node_distance(g, edge.a, x);
      if (via_ab < best) {
        best = via_ab;
        best_edge = e;
        forward = true;
      }
      if (via_ba < best) {
        best = via_ba;
        best_edge = e;
        forward = false;
      }
    }
    if (best_edge < 0 || prev[x] <= best + kTieTolerance) {
      --k;
      continue;
    }
    const auto& edge = g.edges[best_edge];
    const int entry = forward ? edge.a : edge.b;
    const int exit = forward ? edge.b : edge.a;
    if (exit != x) reversed.push_back(arc_leg(g.nodes[exit], g.nodes[x]));
    reversed.push_back(chord_leg(g, entry, exit, edge));
    x = entry;
    --k;
  }
  if (x != pi) reversed.push_back(arc_leg(g.nodes[pi], g.nodes[x]));

  DistanceResult result;
  result.length = length;
  result.witness.legs.assign(reversed.rbegin(), reversed.rend());
  for (const auto& leg : result.witness.legs) result.witness.total += leg.length;
  return result;
}

// In-place closure val[x] = min_y val[y] + arc(y, x) on a sorted circular point
// list; gaps[j] is the ccw gap from point j to point j + 1 (mod size).
void arc_closure(std::vector<double>& val, const std::vector<double>& gaps) {
  const std::size_t n = val.size();
  if (n < 2) return;
  for (int round = 0; round < 2; ++round) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t nj = j + 1 == n ? 0 : j + 1;
      const double c = val[j] + gaps[j];
      if (c < val[nj]) val[nj] = c;
    }
  }
  for (int round = 0; round < 2; ++round) {
    for (std::size_t j = n; j-- > 0;) {
      const std::size_t pj = j == 0 ? n - 1 : j - 1;
      const double c = val[j] + gaps[pj];
      if (c < val[pj]) val[pj] = c;
    }
  }
}

std::vector<double> circular_gaps(const std::vector<double>& sorted) {
  std::vector<double> gaps(sorted.size());
  for (std::size_t j = 0; j + 1 < sorted.size(); ++j) gaps[j] = sorted[j + 1] - sorted[j];
  if (!sorted.empty()) gaps.back() = kTwoPi - sorted.back() + sorted.front();
  return gaps;
}

struct PairMax {
  double value = -kInf;
  std::size_t i = 0;
  std::size_t j = 0;

  void offer(double v, std::size_t vi, std::size_t vj) {
    if (v > value || (v == value && (vi < i || (vi == i && vj < j)))) {
      value = v;
      i = vi;
      j = vj;
    }
  }
};

}  // namespace

std::size_t PathWitness::shortcut_count() const {
  return static_cast<std::size_t>(
      std::count_if(legs.begin(), legs.end(), [](const Leg& l) { return l.kind == Leg::Kind::shortcut; }));
}

std::vector<int> PathWitness::shortcuts_used() const {
  std::vector<int> used;
  for (const auto& l : legs)
    if (l.kind == Leg::Kind::shortcut) used.push_back(l.shortcut);
  return used;
}

DistanceResult distance(const Configuration& config, Angle p, Angle q) {
  if (p <= q) return ordered_distance(config, p, q);
  DistanceResult r = ordered_distance(config, q, p);
  std::reverse(r.witness.legs.begin(), r.witness.legs.end());
  for (auto& leg : r.witness.legs) {
    std::swap(leg.from, leg.to);
    leg.ccw = !leg.ccw;
  }
  return r;
}

double single_shortcut_distance(const Shortcut& s, Angle p, Angle q) {
  const double direct = circle_distance(p, q);
  const double uv = circle_distance(p, s.u()) + s.length() + circle_distance(s.v(), q);
  const double vu = circle_distance(p, s.v()) + s.length() + circle_distance(s.u(), q);
  return std::min({direct, uv, vu});
}

std::vector<double> diameter_candidates(const Configuration& config, const DiameterOptions& options) {
  if (!(options.step > 0.0)) throw DomainError("diameter grid step must be positive");
  const auto mesh = static_cast<std::size_t>(std::ceil(kTwoPi / options.step));
  std::vector<double> pts;
  pts.reserve(mesh + 10 * config.size());
  for (std::size_t j = 0; j < mesh; ++j) pts.push_back(normalize_angle(kTwoPi * static_cast<double>(j) / mesh));
  for (const auto& s : config.shortcuts) {
    pts.push_back(s.u().value());
    pts.push_back(s.v().value());
    if (!options.feature_points) continue;
    pts.push_back(s.u().antipode().value());
    pts.push_back(s.v().antipode().value());
    const Umbra um = umbra(s);
    for (const Arc& arc : {um.inner, um.outer, deep_umbra(s)}) {
      pts.push_back(arc.start().value());
      pts.push_back(arc.end().value());
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

DiameterBound diameter_bounds(const Configuration& config, const DiameterOptions& options) {
  const std::vector<double> cand = diameter_candidates(config, options);
  const std::vector<double> cand_gaps = circular_gaps(cand);
  const ChordGraph g = build_graph(config, {});
  const std::vector<double> node_gaps = circular_gaps(g.nodes);
  std::vector<std::size_t> node_slot(g.nodes.size());
  for (std::size_t x = 0; x < g.nodes.size(); ++x)
    node_slot[x] = static_cast<std::size_t>(std::lower_bound(cand.begin(), cand.end(), g.nodes[x]) - cand.begin());

  const std::size_t m = cand.size();
  const std::size_t n = g.nodes.size();
  PairMax global;

#pragma omp parallel
  {
    PairMax local;
    std::vector<double> b(n), seed(n), field(m);
#pragma omp for schedule(dynamic, 16)
    for (std::size_t i = 0; i < m; ++i) {
      const Angle p(cand[i]);
      for (std::size_t x = 0; x < n; ++x) b[x] = circle_distance(p, Angle(g.nodes[x]));
      for (std::size_t layer = 0; layer <= g.edges.size(); ++layer) {
        seed = b;
        for (const auto& e : g.edges) {
          seed[e.b] = std::min(seed[e.b], b[e.a] + e.length);
          seed[e.a] = std::min(seed[e.a], b[e.b] + e.length);
        }
        arc_closure(seed, node_gaps);
        bool improved = false;
        for (std::size_t x = 0; x < n; ++x) {
          if (seed[x] < b[x]) {
            b[x] = seed[x];
            improved = true;
          }
        }
        if (!improved) break;
      }
      std::fill(field.begin(), field.end(), kInf);
      for (std::size_t x = 0; x < n; ++x) field[node_slot[x]] = std::min(field[node_slot[x]], b[x]);
      field[i] = 0.0;
      arc_closure(field, cand_gaps);
      for (std::size_t j = 0; j < m; ++j) local.offer(field[j], i, j);
    }
#pragma omp critical
    global.offer(local.value, local.i, local.j);
  }

  DiameterBound bound;
  bound.lo = global.value;
  bound.hi = global.value + 2.0 * options.step;
  bound.p = Angle(cand[global.i]);
  bound.q = Angle(cand[global.j]);
  bound.step = options.step;
  bound.candidates = m;
  return bound;
}

}  // namespace circ
