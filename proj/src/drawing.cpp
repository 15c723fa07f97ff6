#include "kleindraw/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kleindraw/error.hpp"

namespace kleindraw {

Drawing::Drawing(Graph g)
    : graph(std::move(g)),
      gamma(static_cast<std::size_t>(graph.vertex_count())),
      delta(static_cast<std::size_t>(graph.edge_count())),
      fixed(static_cast<std::size_t>(graph.vertex_count()), 0) {}

KleinShift oriented_shift(const Drawing& d, Vertex from, std::size_t edge) {
  return d.graph.edge(edge).u == from ? d.delta[edge] : inverse(d.delta[edge]);
}

void set_oriented_shift(Drawing& d, Vertex from, std::size_t edge, KleinShift s) {
  d.delta[edge] = d.graph.edge(edge).u == from ? s : inverse(s);
}

Point rel_coord(const Drawing& d, Vertex v, Vertex u) {
  auto e = d.graph.edge_index(v, u);
  if (!e)
    throw Error(ErrorCode::NotIncident,
                "vertex " + std::to_string(u) + " is not adjacent to " + std::to_string(v));
  return apply_shift(oriented_shift(d, v, *e), d.gamma[u]);
}

void normalize_vertex_in_place(Drawing& d, Vertex v) {
  Folded f = fold(d.gamma[v]);
  if (f.shift == KleinShift{}) {
    d.gamma[v] = f.point;
    return;
  }
  // Old chart = f.shift applied to the new one.
  KleinShift back = inverse(f.shift);
  for (Vertex u : d.graph.neighbors(v)) {
    std::size_t e = *d.graph.edge_index(v, u);
    set_oriented_shift(d, v, e, compose(back, oriented_shift(d, v, e)));
  }
  d.gamma[v] = f.point;
}

Drawing normalize_vertex(Drawing d, Vertex v) {
  normalize_vertex_in_place(d, v);
  return d;
}

Segment edge_segment(const Drawing& d, std::size_t edge) {
  const auto& e = d.graph.edge(edge);
  return {d.gamma[e.u], apply_shift(d.delta[edge], d.gamma[e.v])};
}

namespace {

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double point_segment_distance(Point p, Segment s) {
  Point d = s.to - s.from;
  double len2 = d.x * d.x + d.y * d.y;
  if (len2 == 0.0) return distance(p, s.from);
  double t = std::clamp(((p.x - s.from.x) * d.x + (p.y - s.from.y) * d.y) / len2, 0.0, 1.0);
  return distance(p, s.from + d * t);
}

double segment_distance(Segment s, Segment t) {
  double d1 = cross(s.from, s.to, t.from), d2 = cross(s.from, s.to, t.to);
  double d3 = cross(t.from, t.to, s.from), d4 = cross(t.from, t.to, s.to);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return 0.0;
  return std::min({point_segment_distance(s.from, t), point_segment_distance(s.to, t),
                   point_segment_distance(t.from, s), point_segment_distance(t.to, s)});
}

struct Placed {
  Segment seg;
  Vertex from;
  Vertex to;
};

bool touches(const Placed& p, const Placed& q, double eps) {
  Point pe[2] = {p.seg.from, p.seg.to};
  Point qe[2] = {q.seg.from, q.seg.to};
  Vertex pv[2] = {p.from, p.to};
  Vertex qv[2] = {q.from, q.to};
  int shared = 0;
  int pi = -1, qi = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (pv[i] == qv[j] && distance(pe[i], qe[j]) < eps) {
        ++shared;
        pi = i;
        qi = j;
      }
  if (shared == 0) return segment_distance(p.seg, q.seg) < eps;
  if (shared == 2) return true;
  // Sharing one endpoint: only a collinear overlap counts.
  Point po = pe[1 - pi], qo = qe[1 - qi];
  return point_segment_distance(po, q.seg) < eps || point_segment_distance(qo, p.seg) < eps;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> crossings(const Drawing& d, double eps) {
  const std::size_t m = d.graph.edges().size();
  int reach = 0;
  for (const auto& s : d.delta) reach = std::max({reach, std::abs(s.a), std::abs(s.b)});
  const int range_a = 2 * reach + 1;
  const int range_b = 2 * reach + 2;

  std::vector<Placed> base(m);
  for (std::size_t i = 0; i < m; ++i) base[i] = {edge_segment(d, i), d.graph.edge(i).u, d.graph.edge(i).v};

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i) {
    const Placed& p = base[i];
    double px0 = std::min(p.seg.from.x, p.seg.to.x) - eps, px1 = std::max(p.seg.from.x, p.seg.to.x) + eps;
    double py0 = std::min(p.seg.from.y, p.seg.to.y) - eps, py1 = std::max(p.seg.from.y, p.seg.to.y) + eps;
    for (std::size_t j = i; j < m; ++j) {
      bool hit = false;
      for (int a = -range_a; a <= range_a && !hit; ++a) {
        for (int b = -range_b; b <= range_b && !hit; ++b) {
          KleinShift g{a, b};
          if (i == j && g == KleinShift{}) continue;
          Placed q{{apply_shift(g, base[j].seg.from), apply_shift(g, base[j].seg.to)}, base[j].from, base[j].to};
          if (std::max(q.seg.from.x, q.seg.to.x) < px0 || std::min(q.seg.from.x, q.seg.to.x) > px1 ||
              std::max(q.seg.from.y, q.seg.to.y) < py0 || std::min(q.seg.from.y, q.seg.to.y) > py1)
            continue;
          hit = touches(p, q, eps);
        }
      }
      if (hit) out.emplace_back(i, j);
    }
  }
  return out;
}

RotationSystem extract_rotation_system(const Drawing& d) {
  const Graph& g = d.graph;
  constexpr double kAngleEps = 1e-12;
  std::vector<std::vector<Vertex>> orders(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<double, Vertex>> dirs;
    for (Vertex u : g.neighbors(v)) {
      Point delta = rel_coord(d, v, u) - d.gamma[v];
      if (std::hypot(delta.x, delta.y) == 0.0)
        throw Error(ErrorCode::DegenerateAngles, "zero-length edge at vertex " + std::to_string(v));
      dirs.emplace_back(std::atan2(delta.y, delta.x), u);
    }
    std::sort(dirs.begin(), dirs.end());
    for (std::size_t k = 0; k < dirs.size() && dirs.size() > 1; ++k) {
      double next = k + 1 < dirs.size() ? dirs[k + 1].first : dirs[0].first + 2 * std::numbers::pi;
      if (next - dirs[k].first < kAngleEps)
        throw Error(ErrorCode::DegenerateAngles, "collinear edges leave vertex " + std::to_string(v));
    }
    for (const auto& [angle, u] : dirs) orders[v].push_back(u);
  }
  std::vector<int> signs;
  for (const auto& s : d.delta) signs.push_back(s.reverses() ? -1 : 1);
  return RotationSystem(g, std::move(orders), std::move(signs));
}

}  // namespace kleindraw

namespace kleindraw {

Drawing relabel(const Drawing& d, std::span<const Vertex> perm) {
  Drawing out(relabel(d.graph, perm));
  for (Vertex v = 0; v < d.graph.vertex_count(); ++v) {
    out.gamma[perm[v]] = d.gamma[v];
    out.fixed[perm[v]] = d.fixed[v];
  }
  for (std::size_t i = 0; i < d.graph.edges().size(); ++i) {
    const auto& e = d.graph.edge(i);
    set_oriented_shift(out, perm[e.u], *out.graph.edge_index(perm[e.u], perm[e.v]), d.delta[i]);
  }
  return out;
}

}  // namespace kleindraw
