#include "kleindraw/draw.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

namespace kleindraw {

namespace {

constexpr KleinShift kIdentity{0, 0};

std::size_t edge_of(const Graph& g, Vertex u, Vertex v) {
  auto e = g.edge_index(u, v);
  if (!e) throw Error(ErrorCode::NotIncident, "no edge " + std::to_string(u) + "-" + std::to_string(v));
  return *e;
}

// Corner of b (in the full rotation) that the dart b->c leaves through: named
// by the h-neighbour of b preceding c.
std::pair<Vertex, Vertex> gap_key(const RotationSystem& rs, const Graph& h, Vertex b, Vertex c) {
  Vertex p = rs.predecessor(b, c);
  while (!h.has_edge(b, p)) p = rs.predecessor(b, p);
  return {b, p};
}

bool in_h(const Graph& h, Vertex v) { return h.degree(v) > 0; }

}  // namespace

BaseMatch match_base(const RotationSystem& rs, const Graph& h, std::span<const EmbeddingRecord> omega) {
  SmoothedSystem sm = induced_smoothed(rs, h);
  for (std::size_t r = 0; r < omega.size(); ++r) {
    const RotationSystem& base = omega[r].system;
    if (base.vertex_count() != sm.core.vertex_count() || base.graph().edge_count() != sm.core.graph().edge_count())
      continue;
    auto eq = equivalent(sm.core, base, true);
    if (!eq) continue;
    RotationSystem switched = rs;
    for (Vertex c = 0; c < sm.core.vertex_count(); ++c)
      if (eq->switched[c]) switched.switch_vertex(sm.branch[c]);
    return {r, std::move(eq->mapping), std::move(switched), std::move(sm)};
  }
  throw Error(ErrorCode::NoBaseMatch, "induced base system matches no database record");
}

BasePlacement place_base(const Graph& g, const BaseMatch& match, const EmbeddingRecord& record) {
  BasePlacement out{Drawing(g), {}};
  const SmoothedSystem& sm = match.smoothed;
  const Graph& base = record.drawing.graph;
  for (Vertex c = 0; c < sm.core.vertex_count(); ++c) {
    Vertex v = sm.branch[c];
    out.drawing.gamma[v] = record.drawing.gamma[match.phi[c]];
    out.drawing.fixed[v] = 1;
  }
  const Graph& core = sm.core.graph();
  out.chain_shifts.resize(core.edges().size());
  for (std::size_t i = 0; i < core.edges().size(); ++i) {
    const Edge& e = core.edge(i);
    Vertex pu = match.phi[e.u], pv = match.phi[e.v];
    KleinShift s = oriented_shift(record.drawing, pu, edge_of(base, pu, pv));
    out.chain_shifts[i] = s;
    const Chain& chain = sm.chains[i];
    if (chain.interior.empty()) set_oriented_shift(out.drawing, chain.from, edge_of(g, chain.from, chain.to), s);
  }
  return out;
}

void place_chains(Drawing& d, std::span<const Chain> chains, std::span<const KleinShift> chain_shifts) {
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const Chain& chain = chains[i];
    std::vector<Vertex> path{chain.from};
    path.insert(path.end(), chain.interior.begin(), chain.interior.end());
    path.push_back(chain.to);
    const std::size_t len = path.size() - 1;

    const Point start = d.gamma[chain.from];
    const Point end = apply_shift(chain_shifts[i], d.gamma[chain.to]);
    // Deck transformation placing each path vertex's folded point on the segment.
    std::vector<KleinShift> placed(path.size(), kIdentity);
    placed.back() = chain_shifts[i];
    for (std::size_t k = 1; k < len; ++k) {
      Folded f = fold(start + (end - start) * (static_cast<double>(k) / static_cast<double>(len)));
      d.gamma[path[k]] = f.point;
      d.fixed[path[k]] = 1;
      placed[k] = f.shift;
    }
    for (std::size_t k = 0; k < len; ++k)
      set_oriented_shift(d, path[k], edge_of(d.graph, path[k], path[k + 1]),
                         compose(inverse(placed[k]), placed[k + 1]));
  }
}

RotationSystem align_to_drawing(const RotationSystem& rs, const Graph& h, const Drawing& d) {
  Drawing hd(h);
  hd.gamma = d.gamma;
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const Edge& e = h.edge(i);
    set_oriented_shift(hd, e.u, i, oriented_shift(d, e.u, edge_of(d.graph, e.u, e.v)));
  }
  auto flips = align_switches(restrict_to(rs, h), extract_rotation_system(hd));
  if (!flips) throw Error(ErrorCode::InvalidRotationSystem, "rotation system disagrees with the drawn subdivision");
  return apply_switches(rs, *flips);
}

FaceCharts chart_faces(const Drawing& d, const RotationSystem& h_system) {
  FaceCharts out;
  out.faces = trace_faces(h_system);
  out.chart.resize(out.faces.orbits.size());
  for (std::size_t o = 0; o < out.faces.orbits.size(); ++o) {
    const auto& walk = out.faces.orbits[o];
    auto& chart = out.chart[o];
    chart.assign(walk.size(), kIdentity);
    KleinShift m = kIdentity;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      chart[k] = m;
      const FaceStep& st = walk[k];
      m = compose(m, oriented_shift(d, st.tail, edge_of(d.graph, st.tail, st.head)));
    }
    if (!(m == kIdentity))
      throw Error(ErrorCode::InvalidRotationSystem, "face boundary does not close up in the drawing");
    for (std::size_t k = 0; k < walk.size(); ++k) {
      const FaceStep& st = walk[k];
      const FaceStep& next = walk[(k + 1) % walk.size()];
      int s = st.orientation * h_system.sign(st.edge);
      Vertex opener = s > 0 ? st.tail : next.head;
      out.corners[{st.head, opener}].emplace_back(o, (k + 1) % walk.size());
    }
  }
  return out;
}

void place_h_chords(Drawing& d, const RotationSystem& rs, const Graph& h) {
  const Graph& g = d.graph;
  std::optional<FaceCharts> charts;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edge(i);
    if (!in_h(h, e.u) || !in_h(h, e.v) || h.has_edge(e.u, e.v)) continue;
    if (!charts) charts = chart_faces(d, restrict_to(rs, h));
    auto ku = charts->corners.find(gap_key(rs, h, e.u, e.v));
    auto kv = charts->corners.find(gap_key(rs, h, e.v, e.u));
    if (ku == charts->corners.end() || kv == charts->corners.end())
      throw Error(ErrorCode::InvalidRotationSystem, "chord corner missing from the face walks");
    bool placed = false;
    for (auto [ou, su] : ku->second) {
      for (auto [ov, sv] : kv->second) {
        if (ou != ov) continue;
        set_oriented_shift(d, e.u, i, compose(inverse(charts->chart[ou][su]), charts->chart[ov][sv]));
        placed = true;
        break;
      }
      if (placed) break;
    }
    if (!placed)
      throw Error(ErrorCode::InvalidRotationSystem,
                  "chord " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins two different faces");
  }
}

FaceAssignment assign_face(const Drawing& d, const RotationSystem& rs, const Graph& h, Vertex v) {
  const Graph& g = d.graph;
  if (in_h(h, v)) throw Error(ErrorCode::InvalidRotationSystem, "vertex already lies on the subdivision");

  FaceAssignment out;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<Vertex> queue{v};
  seen[v] = 1;
  std::vector<std::pair<Vertex, Vertex>> attachments;  // (bridge vertex, h vertex)
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    out.bridge.push_back(x);
    for (Vertex y : g.neighbors(x)) {
      if (in_h(h, y)) {
        attachments.emplace_back(x, y);
      } else if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(out.bridge.begin(), out.bridge.end());
  if (attachments.empty()) throw Error(ErrorCode::DisconnectedGraph, "bridge has no attachment to the subdivision");

  FaceCharts charts = chart_faces(d, restrict_to(rs, h));
  std::set<std::size_t> common;
  std::vector<const std::vector<std::pair<std::size_t, std::size_t>>*> slots;
  for (std::size_t a = 0; a < attachments.size(); ++a) {
    auto [x, y] = attachments[a];
    auto it = charts.corners.find(gap_key(rs, h, y, x));
    if (it == charts.corners.end())
      throw Error(ErrorCode::InvalidRotationSystem, "attachment corner missing from the face walks");
    std::set<std::size_t> orbits;
    for (auto [o, k] : it->second) orbits.insert(o);
    if (a == 0) {
      common = std::move(orbits);
    } else {
      std::set<std::size_t> both;
      std::set_intersection(common.begin(), common.end(), orbits.begin(), orbits.end(),
                            std::inserter(both, both.end()));
      common = std::move(both);
    }
    slots.push_back(&it->second);
  }
  if (common.empty())
    throw Error(ErrorCode::InvalidRotationSystem,
                "bridge of vertex " + std::to_string(v) + " attaches to more than one face");
  const std::size_t face = *common.begin();
  const auto& walk = charts.faces.orbits[face];
  const auto& chart = charts.chart[face];
  out.walk = walk;

  Point sum{};
  for (std::size_t k = 0; k < walk.size(); ++k) sum = sum + apply_shift(chart[k], d.gamma[walk[k].tail]);
  Folded centre = fold(sum * (1.0 / static_cast<double>(walk.size())));
  out.point = centre.point;
  const KleinShift back = inverse(centre.shift);

  for (std::size_t a = 0; a < attachments.size(); ++a) {
    auto [x, y] = attachments[a];
    std::size_t step = 0;
    for (auto [o, k] : *slots[a])
      if (o == face) {
        step = k;
        break;
      }
    std::size_t e = edge_of(g, x, y);
    KleinShift s = compose(back, chart[step]);  // from x to y
    out.shifts.emplace_back(e, x < y ? s : inverse(s));
  }
  for (Vertex x : out.bridge)
    for (Vertex y : g.neighbors(x))
      if (x < y && !in_h(h, y)) out.shifts.emplace_back(edge_of(g, x, y), kIdentity);
  return out;
}

TutteResult tutte(Drawing d, double eps, int max_iter) {
  const Graph& g = d.graph;
  double worst = 0.0;
  for (int sweep = 1; sweep <= max_iter; ++sweep) {
    worst = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (d.fixed[v] || g.degree(v) == 0) continue;
      Point mean{};
      for (Vertex u : g.neighbors(v)) mean = mean + rel_coord(d, v, u);
      mean = mean * (1.0 / g.degree(v));
      worst = std::max(worst, distance(mean, d.gamma[v]));
      d.gamma[v] = mean;
      normalize_vertex_in_place(d, v);
    }
    if (worst < eps) return {std::move(d), sweep, worst};
  }
  throw NoConvergenceError("barycentric sweeps did not converge in " + std::to_string(max_iter) +
                               " iterations (last displacement " + std::to_string(worst) + ")",
                           std::move(d));
}

DrawResult draw(const Graph& g, const RotationSystem& rs, std::span<const EmbeddingRecord> omega,
                const DrawOptions& options) {
  if (!(rs.graph() == g)) throw Error(ErrorCode::InvalidRotationSystem, "rotation system is for another graph");
  if (!is_k_connected(g, 3)) throw Error(ErrorCode::NotThreeConnected, "graph is not 3-connected");
  if (is_planar(g)) throw Error(ErrorCode::GraphIsPlanar, "graph is planar");
  if (int chi = euler_characteristic(rs); chi != 0)
    throw Error(ErrorCode::NotKleinSystem, "Euler characteristic is " + std::to_string(chi) + ", not 0");
  if (is_balanced(rs)) throw Error(ErrorCode::NotKleinSystem, "rotation system is orientable (balanced)");

  Graph h = kuratowski_subgraph(g);
  BaseMatch match = match_base(rs, h, omega);
  const EmbeddingRecord& record = omega[match.record];
  BasePlacement base = place_base(g, match, record);
  Drawing d = std::move(base.drawing);
  place_chains(d, match.smoothed.chains, base.chain_shifts);

  RotationSystem aligned = align_to_drawing(match.switched, h, d);
  place_h_chords(d, aligned, h);

  std::vector<char> done(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (done[v] || in_h(h, v)) continue;
    FaceAssignment fa = assign_face(d, aligned, h, v);
    for (Vertex x : fa.bridge) {
      d.gamma[x] = fa.point;
      done[x] = 1;
    }
    for (auto [e, s] : fa.shifts) d.delta[e] = s;
  }

  TutteResult t = tutte(std::move(d), options.eps, options.max_iter);
  auto bad = crossings(t.drawing, options.crossing_eps);
  if (!bad.empty())
    throw Error(ErrorCode::DrawingInvalid, std::to_string(bad.size()) + " edge crossing(s) in the final drawing");
  if (!equivalent(extract_rotation_system(t.drawing), rs, false))
    throw Error(ErrorCode::DrawingInvalid, "drawing realizes a different rotation system");
  return {std::move(t.drawing), std::move(h), record.id, t.sweeps};
}

}  // namespace kleindraw
