#include "kleindraw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "kleindraw/error.hpp"

namespace kleindraw {

int Graph::min_degree() const noexcept {
  int best = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    int d = static_cast<int>(adj_[v].size());
    if (v == 0 || d < best) best = d;
  }
  return best;
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const noexcept {
  if (!contains(u) || !contains(v)) return std::nullopt;
  const auto& row = adj_[u];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return adj_edge_[u][static_cast<std::size_t>(it - row.begin())];
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside 0.." +
                      std::to_string(n - 1));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw Error(ErrorCode::DuplicateEdge,
                "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.adj_edge_.assign(static_cast<std::size_t>(n), {});
  // Edges are sorted by (u, v), so appending in this order keeps every row sorted
  // for the lower endpoint; the upper endpoint rows need a final sort.
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    auto [u, v] = g.edges_[i];
    g.adj_[u].push_back(v);
    g.adj_edge_[u].push_back(i);
    g.adj_[v].push_back(u);
    g.adj_edge_[v].push_back(i);
  }
  for (std::size_t v = 0; v < g.adj_.size(); ++v) {
    std::vector<std::size_t> order(g.adj_[v].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return g.adj_[v][x] < g.adj_[v][y]; });
    std::vector<Vertex> nbrs;
    std::vector<std::size_t> ids;
    for (auto i : order) {
      nbrs.push_back(g.adj_[v][i]);
      ids.push_back(g.adj_edge_[v][i]);
    }
    g.adj_[v] = std::move(nbrs);
    g.adj_edge_[v] = std::move(ids);
  }
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> list(edges);
  return build_graph(n, list);
}

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return build_graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return build_graph(n, e);
}

Graph make_named(std::string_view name) {
  if (name == "K5") return complete_graph(5);
  if (name == "K33") {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < 3; ++u)
      for (Vertex v = 3; v < 6; ++v) e.emplace_back(u, v);
    return build_graph(6, e);
  }
  throw Error(ErrorCode::UnknownName, "unknown graph name '" + std::string(name) + "'");
}

Graph edge_subgraph(const Graph& g, std::span<const std::size_t> edge_ids) {
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(edge_ids.size());
  for (auto i : edge_ids) e.emplace_back(g.edge(i).u, g.edge(i).v);
  return build_graph(g.vertex_count(), e);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(g.edges().size());
  for (const auto& edge : g.edges()) e.emplace_back(perm[edge.u], perm[edge.v]);
  return build_graph(g.vertex_count(), e);
}

namespace {

// Connectivity of g restricted to vertices with removed[v] == false.
bool connected_without(const Graph& g, const std::vector<char>& removed) {
  int n = g.vertex_count();
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (removed[u] || seen[u]) continue;
      seen[u] = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == alive;
}

bool cuts_recursive(const Graph& g, std::vector<char>& removed, Vertex from, int left) {
  if (left == 0) return !connected_without(g, removed);
  for (Vertex v = from; v < g.vertex_count(); ++v) {
    removed[v] = 1;
    bool cut = cuts_recursive(g, removed, v + 1, left - 1);
    removed[v] = 0;
    if (cut) return true;
  }
  return false;
}

}  // namespace

bool is_connected(const Graph& g) {
  return connected_without(g, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() <= k) return false;
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int r = 0; r < k; ++r)
    if (cuts_recursive(g, removed, 0, r)) return false;
  return true;
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace kleindraw
