#include "kleindraw/rotation.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "kleindraw/error.hpp"

namespace kleindraw {

namespace {

std::size_t neighbor_rank(const Graph& g, Vertex v, Vertex u) {
  auto nbrs = g.neighbors(v);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
  return static_cast<std::size_t>(it - nbrs.begin());
}

}  // namespace

RotationSystem::RotationSystem(Graph graph, std::vector<std::vector<Vertex>> orders,
                               std::vector<int> signs)
    : graph_(std::move(graph)), order_(std::move(orders)) {
  const int n = graph_.vertex_count();
  if (static_cast<int>(order_.size()) != n)
    throw Error(ErrorCode::InvalidRotationSystem, "expected one rotation per vertex");
  if (static_cast<int>(signs.size()) != graph_.edge_count())
    throw Error(ErrorCode::InvalidRotationSystem, "expected one sign per edge");
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted_order = order_[v];
    std::sort(sorted_order.begin(), sorted_order.end());
    auto nbrs = graph_.neighbors(v);
    if (!std::equal(sorted_order.begin(), sorted_order.end(), nbrs.begin(), nbrs.end()))
      throw Error(ErrorCode::InvalidRotationSystem,
                  "rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbours");
  }
  sign_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidRotationSystem, "edge sign must be +1 or -1");
    sign_.push_back(static_cast<std::int8_t>(s));
  }
  order_edge_.resize(static_cast<std::size_t>(n));
  position_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rebuild_positions(v);
}

RotationSystem RotationSystem::sorted(Graph graph) {
  std::vector<std::vector<Vertex>> orders;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    auto nbrs = graph.neighbors(v);
    orders.emplace_back(nbrs.begin(), nbrs.end());
  }
  std::vector<int> signs(static_cast<std::size_t>(graph.edge_count()), 1);
  return RotationSystem(std::move(graph), std::move(orders), std::move(signs));
}

void RotationSystem::rebuild_positions(Vertex v) {
  const auto& order = order_[v];
  auto& edges = order_edge_[v];
  auto& pos = position_[v];
  edges.resize(order.size());
  pos.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    edges[k] = *graph_.edge_index(v, order[k]);
    pos[neighbor_rank(graph_, v, order[k])] = static_cast<std::uint32_t>(k);
  }
}

std::size_t RotationSystem::position(Vertex v, Vertex u) const {
  return position_[v][neighbor_rank(graph_, v, u)];
}

Vertex RotationSystem::successor(Vertex v, Vertex u) const {
  const auto& order = order_[v];
  return order[(position(v, u) + 1) % order.size()];
}

Vertex RotationSystem::predecessor(Vertex v, Vertex u) const {
  const auto& order = order_[v];
  return order[(position(v, u) + order.size() - 1) % order.size()];
}

int RotationSystem::sign(Vertex u, Vertex v) const {
  auto e = graph_.edge_index(u, v);
  if (!e) throw Error(ErrorCode::NotIncident, "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return sign_[*e];
}

int RotationSystem::negative_edge_count() const noexcept {
  return static_cast<int>(std::count(sign_.begin(), sign_.end(), std::int8_t{-1}));
}

void RotationSystem::switch_vertex(Vertex v) {
  if (!graph_.contains(v))
    throw Error(ErrorCode::VertexOutOfRange, "cannot switch vertex " + std::to_string(v));
  std::reverse(order_[v].begin(), order_[v].end());
  for (std::size_t e : order_edge_[v]) sign_[e] = static_cast<std::int8_t>(-sign_[e]);
  rebuild_positions(v);
}

void RotationSystem::rotate_to_front(Vertex v, Vertex first) {
  auto& order = order_[v];
  auto it = std::find(order.begin(), order.end(), first);
  std::rotate(order.begin(), it, order.end());
  rebuild_positions(v);
}

void RotationSystem::set_rotation(Vertex v, std::span<const Vertex> order) {
  order_[v].assign(order.begin(), order.end());
  rebuild_positions(v);
}

bool same_up_to_rotation(const RotationSystem& a, const RotationSystem& b) {
  if (!(a.graph() == b.graph())) return false;
  if (!std::equal(a.signs().begin(), a.signs().end(), b.signs().begin(), b.signs().end())) return false;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    auto ra = a.rotation(v);
    auto rb = b.rotation(v);
    if (ra.empty()) continue;
    std::size_t shift = b.position(v, ra[0]);
    for (std::size_t k = 0; k < ra.size(); ++k)
      if (ra[k] != rb[(k + shift) % rb.size()]) return false;
  }
  return true;
}

RotationSystem switch_vertex(RotationSystem rs, Vertex v) {
  rs.switch_vertex(v);
  return rs;
}

RotationSystem apply_switches(RotationSystem rs, std::span<const char> switched) {
  for (Vertex v = 0; v < static_cast<Vertex>(switched.size()); ++v)
    if (switched[v]) rs.switch_vertex(v);
  return rs;
}

RotationSystem relabel(const RotationSystem& rs, std::span<const Vertex> perm) {
  const Graph& g = rs.graph();
  Graph target = relabel(g, perm);
  std::vector<std::vector<Vertex>> orders(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& order = orders[perm[v]];
    for (Vertex u : rs.rotation(v)) order.push_back(perm[u]);
  }
  std::vector<int> signs(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edge(i);
    signs[*target.edge_index(perm[e.u], perm[e.v])] = rs.sign(i);
  }
  return RotationSystem(std::move(target), std::move(orders), std::move(signs));
}

RotationSystem restrict_to(const RotationSystem& rs, const Graph& sub) {
  std::vector<std::vector<Vertex>> orders(static_cast<std::size_t>(sub.vertex_count()));
  for (Vertex v = 0; v < sub.vertex_count(); ++v)
    for (Vertex u : rs.rotation(v))
      if (sub.has_edge(v, u)) orders[v].push_back(u);
  std::vector<int> signs;
  for (const auto& e : sub.edges()) signs.push_back(rs.sign(e.u, e.v));
  return RotationSystem(sub, std::move(orders), std::move(signs));
}

FormatResult format(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 3)
      throw Error(ErrorCode::DegreeTooLow,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  FormatResult out{rs, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0)};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex low = g.neighbors(v).front();
    if (out.system.successor(v, low) > out.system.predecessor(v, low)) {
      out.system.switch_vertex(v);
      out.switched[v] = 1;
    }
    out.system.rotate_to_front(v, low);
  }
  return out;
}

namespace {

// State encoding: dart = 2*edge + (tail is the upper endpoint), state = 2*dart + (orientation < 0).
struct StateCodec {
  const RotationSystem& rs;

  std::size_t encode(Vertex tail, std::size_t edge, int orientation) const {
    std::size_t dart = 2 * edge + (rs.graph().edge(edge).u == tail ? 0 : 1);
    return 2 * dart + (orientation < 0 ? 1 : 0);
  }

  // Applies the face-walking map to (tail -> head over edge, orientation).
  void advance(Vertex& tail, Vertex& head, std::size_t& edge, int& orientation) const {
    int turned = orientation * rs.sign(edge);
    std::size_t d = rs.rotation(head).size();
    std::size_t p = rs.position(head, tail);
    std::size_t next = turned > 0 ? (p + 1) % d : (p + d - 1) % d;
    Vertex x = rs.rotation(head)[next];
    edge = rs.rotation_edge(head, next);
    tail = head;
    head = x;
    orientation = turned;
  }
};

}  // namespace

FaceSet trace_faces(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  StateCodec codec{rs};
  const std::size_t states = 4 * static_cast<std::size_t>(g.edge_count());
  std::vector<std::size_t> orbit_of(states, SIZE_MAX);
  FaceSet faces;
  for (std::size_t start = 0; start < states; ++start) {
    if (orbit_of[start] != SIZE_MAX) continue;
    std::size_t edge = start / 4;
    bool upper = (start / 2) % 2 == 1;
    Vertex tail = upper ? g.edge(edge).v : g.edge(edge).u;
    Vertex head = g.edge(edge).other(tail);
    int orientation = start % 2 == 1 ? -1 : 1;
    std::vector<FaceStep> walk;
    std::size_t id = faces.orbits.size();
    for (std::size_t s = start; orbit_of[s] == SIZE_MAX;) {
      orbit_of[s] = id;
      walk.push_back({tail, head, edge, orientation});
      codec.advance(tail, head, edge, orientation);
      s = codec.encode(tail, edge, orientation);
    }
    faces.orbits.push_back(std::move(walk));
  }
  faces.mate.resize(faces.orbits.size());
  for (std::size_t i = 0; i < faces.orbits.size(); ++i) {
    const FaceStep& first = faces.orbits[i].front();
    int back = -first.orientation * rs.sign(first.edge);
    faces.mate[i] = orbit_of[codec.encode(first.head, first.edge, back)];
  }
  return faces;
}

int count_face_orbits(const RotationSystem& rs, std::vector<char>& scratch) {
  const Graph& g = rs.graph();
  StateCodec codec{rs};
  const std::size_t states = 4 * static_cast<std::size_t>(g.edge_count());
  scratch.assign(states, 0);
  int orbits = 0;
  for (std::size_t start = 0; start < states; ++start) {
    if (scratch[start]) continue;
    ++orbits;
    std::size_t edge = start / 4;
    Vertex tail = (start / 2) % 2 == 1 ? g.edge(edge).v : g.edge(edge).u;
    Vertex head = g.edge(edge).other(tail);
    int orientation = start % 2 == 1 ? -1 : 1;
    for (std::size_t s = start; !scratch[s];) {
      scratch[s] = 1;
      codec.advance(tail, head, edge, orientation);
      s = codec.encode(tail, edge, orientation);
    }
  }
  return orbits;
}

int euler_characteristic(const RotationSystem& rs) {
  std::vector<char> scratch;
  int faces = count_face_orbits(rs, scratch) / 2;
  return rs.graph().vertex_count() - rs.graph().edge_count() + faces;
}

bool is_balanced(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "balance needs a connected graph");
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::deque<Vertex> queue{0};
  side[0] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      int want = side[v] * rs.sign(v, u);
      if (side[u] == 0) {
        side[u] = want;
        queue.push_back(u);
      } else if (side[u] != want) {
        return false;
      }
    }
  }
  return true;
}

int frustration(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  const int n = g.vertex_count();
  if (n > 20) throw Error(ErrorCode::TooLarge, "frustration is brute force; at most 20 vertices");
  if (n == 0) return 0;
  int best = g.edge_count();
  // Vertex n-1 stays unswitched: switching everything changes no sign.
  const std::uint32_t sets = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < sets; ++mask) {
    int negative = 0;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edge(i);
      bool flipped = (((mask >> e.u) ^ (mask >> e.v)) & 1u) != 0;
      if ((rs.sign(i) < 0) != flipped) ++negative;
    }
    best = std::min(best, negative);
  }
  return best;
}

namespace {

// Backtracking over graph isomorphisms a -> b; `visit` returns true to stop.
template <typename Visit>
bool for_each_isomorphism(const Graph& a, const Graph& b, std::vector<Vertex>& map,
                          std::vector<char>& used, Vertex next, Visit&& visit) {
  const int n = a.vertex_count();
  if (next == n) return visit(map);
  for (Vertex t = 0; t < n; ++t) {
    if (used[t] || a.degree(next) != b.degree(t)) continue;
    bool ok = true;
    for (Vertex prev = 0; prev < next && ok; ++prev)
      ok = a.has_edge(prev, next) == b.has_edge(map[prev], t);
    if (!ok) continue;
    map[next] = t;
    used[t] = 1;
    if (for_each_isomorphism(a, b, map, used, next + 1, visit)) return true;
    used[t] = 0;
  }
  return false;
}

}  // namespace

std::optional<Equivalence> equivalent(const RotationSystem& a, const RotationSystem& b,
                                      bool allow_relabel) {
  const Graph& ga = a.graph();
  const Graph& gb = b.graph();
  if (ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count()) return std::nullopt;
  const int n = ga.vertex_count();
  FormatResult fb = format(b);

  auto witness = [&](const FormatResult& fa, std::span<const Vertex> map) {
    Equivalence eq{std::vector<Vertex>(map.begin(), map.end()),
                   std::vector<char>(static_cast<std::size_t>(n), 0)};
    for (Vertex v = 0; v < n; ++v) eq.switched[v] = fa.switched[map[v]] != fb.switched[map[v]];
    return eq;
  };

  if (!allow_relabel) {
    if (!(ga == gb)) return std::nullopt;
    FormatResult fa = format(a);
    if (!(fa.system == fb.system)) return std::nullopt;
    std::vector<Vertex> identity(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) identity[v] = v;
    return witness(fa, identity);
  }

  std::optional<Equivalence> found;
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for_each_isomorphism(ga, gb, map, used, 0, [&](const std::vector<Vertex>& m) {
    FormatResult fa = format(relabel(a, m));
    if (!(fa.system == fb.system)) return false;
    found = witness(fa, m);
    return true;
  });
  return found;
}

std::optional<std::vector<char>> align_switches(const RotationSystem& a, const RotationSystem& b) {
  const Graph& g = a.graph();
  if (!(g == b.graph())) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<int> flip(static_cast<std::size_t>(n), -1);  // -1 undecided
  for (Vertex v = 0; v < n; ++v) {
    auto ra = a.rotation(v);
    if (ra.size() < 3) continue;
    auto rb = b.rotation(v);
    std::size_t d = ra.size();
    std::size_t p = b.position(v, ra[0]);
    bool same = true, reversed = true;
    for (std::size_t k = 0; k < d; ++k) {
      same = same && ra[k] == rb[(p + k) % d];
      reversed = reversed && ra[k] == rb[(p + d - k) % d];
    }
    if (!same && !reversed) return std::nullopt;
    flip[v] = same ? 0 : 1;
  }
  auto propagate = [&](Vertex root) {
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (flip[u] >= 0) continue;
        bool negate = a.sign(v, u) != b.sign(v, u);
        flip[u] = flip[v] ^ (negate ? 1 : 0);
        queue.push_back(u);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (flip[v] >= 0) propagate(v);
  for (Vertex v = 0; v < n; ++v)
    if (flip[v] < 0) {
      flip[v] = 0;
      propagate(v);
    }
  std::vector<char> switched(flip.begin(), flip.end());
  if (!same_up_to_rotation(apply_switches(a, switched), b)) return std::nullopt;
  return switched;
}

SmoothedSystem induced_smoothed(const RotationSystem& rs, const Graph& h) {
  for (const auto& e : h.edges())
    if (!rs.graph().has_edge(e.u, e.v))
      throw Error(ErrorCode::NotASubdivision, "subdivision edge missing from the graph");
  Subdivision sub = smooth(h);
  const int k = sub.core.vertex_count();

  std::map<Vertex, Vertex> core_of;
  for (Vertex c = 0; c < k; ++c) core_of[sub.branch[c]] = c;
  // (branch vertex, first neighbour along the chain) -> core vertex at the far end
  std::map<std::pair<Vertex, Vertex>, Vertex> far_end;
  std::vector<int> signs(static_cast<std::size_t>(sub.core.edge_count()), 1);
  for (std::size_t i = 0; i < sub.chains.size(); ++i) {
    const Chain& chain = sub.chains[i];
    std::vector<Vertex> path{chain.from};
    path.insert(path.end(), chain.interior.begin(), chain.interior.end());
    path.push_back(chain.to);
    int product = 1;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) product *= rs.sign(path[j], path[j + 1]);
    signs[i] = product;
    far_end[{chain.from, path[1]}] = core_of[chain.to];
    far_end[{chain.to, path[path.size() - 2]}] = core_of[chain.from];
  }

  std::vector<std::vector<Vertex>> orders(static_cast<std::size_t>(k));
  for (Vertex c = 0; c < k; ++c) {
    Vertex b = sub.branch[c];
    for (Vertex x : rs.rotation(b))
      if (h.has_edge(b, x)) orders[c].push_back(far_end.at({b, x}));
  }
  return {RotationSystem(sub.core, std::move(orders), std::move(signs)), std::move(sub.branch),
          std::move(sub.chains)};
}

}  // namespace kleindraw
