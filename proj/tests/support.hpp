#pragma once
// Generators and brute-force oracles shared by the test binaries. The oracles
// deliberately avoid the library's own traversal code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kleindraw/error.hpp"
#include "kleindraw/graph.hpp"
#include "kleindraw/rotation.hpp"

namespace testkit {

using namespace kleindraw;

// Code of the Error thrown by fn, if any.
template <class F>
std::optional<ErrorCode> error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }
inline bool coin() { return uniform(0, 1) == 1; }

inline Graph random_graph(int n, double p) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::bernoulli_distribution take(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (take(rng())) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

inline RotationSystem random_system(const Graph& g, bool signed_edges = true) {
  std::vector<std::vector<Vertex>> orders;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> order(nb.begin(), nb.end());
    std::shuffle(order.begin(), order.end(), rng());
    orders.push_back(std::move(order));
  }
  std::vector<int> signs(static_cast<std::size_t>(g.edge_count()), 1);
  if (signed_edges)
    for (int& s : signs) s = coin() ? -1 : 1;
  return RotationSystem(g, std::move(orders), std::move(signs));
}

inline std::vector<Vertex> random_perm(int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

inline std::vector<char> random_switches(int n) {
  std::vector<char> s(static_cast<std::size_t>(n));
  for (char& c : s) c = coin() ? 1 : 0;
  return s;
}

// Rotates every cyclic order by a random amount.
inline RotationSystem random_rotations(RotationSystem rs) {
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    auto r = rs.rotation(v);
    if (!r.empty()) rs.rotate_to_front(v, r[static_cast<std::size_t>(uniform(0, static_cast<int>(r.size()) - 1))]);
  }
  return rs;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
    return c;
  }
};

// Face count from the flag formulation: every dart carries two flags (the
// sides towards its successor and its predecessor); corners glue the
// successor side of one dart to the predecessor side of the next, edges glue
// flags across, swapping sides unless the edge is twisted. Faces are the
// classes of the generated equivalence.
inline int flag_face_count(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  std::vector<int> base(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) base[v + 1] = base[v] + g.degree(v);
  auto flag = [&](Vertex v, std::size_t i, int side) { return 2 * (base[v] + static_cast<int>(i)) + side; };
  auto slot = [&](Vertex v, Vertex u) {
    auto r = rs.rotation(v);
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), u) - r.begin());
  };
  UnionFind uf(2 * base.back());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = rs.rotation(v).size();
    for (std::size_t i = 0; i < d; ++i) uf.unite(flag(v, i, 0), flag(v, (i + 1) % d, 1));
  }
  for (const Edge& e : g.edges()) {
    std::size_t i = slot(e.u, e.v), j = slot(e.v, e.u);
    bool twisted = rs.sign(e.u, e.v) < 0;
    for (int side = 0; side < 2; ++side) uf.unite(flag(e.u, i, side), flag(e.v, j, twisted ? side : 1 - side));
  }
  return uf.classes();
}

inline int oracle_euler(const RotationSystem& rs) {
  return rs.vertex_count() - rs.graph().edge_count() + flag_face_count(rs);
}

inline bool oracle_balanced(const RotationSystem& rs) {
  const int n = rs.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Edge& e : rs.graph().edges()) {
      int s = rs.sign(e.u, e.v) * (((mask >> e.u) ^ (mask >> e.v)) & 1 ? -1 : 1);
      if (s < 0) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

inline bool oracle_connected(const Graph& g, std::uint32_t removed = 0) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges())
    if (!((removed >> e.u) & 1) && !((removed >> e.v) & 1)) uf.unite(e.u, e.v);
  int roots = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!((removed >> v) & 1)) roots += uf.find(v) == v;
  return roots <= 1;
}

inline bool oracle_three_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 3) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) <= 2 && !oracle_connected(g, mask)) return false;
  return true;
}

// Heffter-Edmonds: planar iff some all-positive rotation system has
// Euler characteristic 2 (per component, so only used on connected graphs).
inline bool oracle_planar(const Graph& g) {
  std::vector<std::vector<Vertex>> orders;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    orders.emplace_back(nb.begin(), nb.end());
  }
  std::vector<int> signs(static_cast<std::size_t>(g.edge_count()), 1);
  // odometer over the orders, keeping each first neighbour in place
  while (true) {
    RotationSystem rs(g, orders, signs);
    if (oracle_euler(rs) == 2) return true;
    Vertex v = 0;
    for (; v < g.vertex_count(); ++v) {
      auto& o = orders[v];
      if (o.size() > 2 && std::next_permutation(o.begin() + 1, o.end())) break;
      if (o.size() > 2) std::sort(o.begin() + 1, o.end());
    }
    if (v == g.vertex_count()) return false;
  }
}

// Adds a vertex inside a random face whose boundary visits distinct
// vertices, joined to all of them, keeping the surface. Returns false when no
// face qualifies.
inline bool stack_face(RotationSystem& rs) {
  FaceSet fs = trace_faces(rs);
  std::vector<std::size_t> candidates;
  for (std::size_t o = 0; o < fs.orbits.size(); ++o) {
    std::set<Vertex> seen;
    for (const FaceStep& st : fs.orbits[o]) seen.insert(st.tail);
    if (seen.size() == fs.orbits[o].size() && seen.size() >= 3) candidates.push_back(o);
  }
  if (candidates.empty()) return false;
  const auto& walk = fs.orbits[candidates[static_cast<std::size_t>(uniform(0, static_cast<int>(candidates.size()) - 1))]];

  const int n = rs.vertex_count();
  const Vertex z = n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : rs.graph().edges()) edges.emplace_back(e.u, e.v);
  std::vector<std::vector<Vertex>> orders;
  for (Vertex v = 0; v < n; ++v) orders.emplace_back(rs.rotation(v).begin(), rs.rotation(v).end());
  std::map<Vertex, int> z_sign;
  std::vector<Vertex> z_order;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    const FaceStep& st = walk[k];
    const FaceStep& next = walk[(k + 1) % walk.size()];
    int s = st.orientation * rs.sign(st.edge);
    Vertex after = s > 0 ? st.tail : next.head;
    auto& order = orders[st.head];
    order.insert(std::find(order.begin(), order.end(), after) + 1, z);
    z_sign[st.head] = s;
    z_order.push_back(st.head);
    edges.emplace_back(st.head, z);
  }
  Graph g = build_graph(n + 1, edges);
  std::vector<int> signs;
  for (const Edge& e : g.edges()) signs.push_back(e.v == z ? z_sign[e.u] : rs.sign(e.u, e.v));
  const int chi = euler_characteristic(rs);
  for (int flip = 0; flip < 2; ++flip) {
    auto o = orders;
    o.push_back(z_order);
    if (flip) std::reverse(o.back().begin(), o.back().end());
    RotationSystem next(g, std::move(o), signs);
    if (euler_characteristic(next) == chi) {
      rs = std::move(next);
      return true;
    }
  }
  return false;
}

}  // namespace testkit
