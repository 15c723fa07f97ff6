#include "kleindraw/kuratowski.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "kleindraw/error.hpp"

namespace kleindraw {

Graph kuratowski_subgraph(const Graph& g) {
  if (is_planar(g)) throw Error(ErrorCode::GraphIsPlanar, "graph is planar");
  std::vector<std::size_t> kept(g.edges().size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    std::vector<std::size_t> trial;
    trial.reserve(kept.size());
    for (std::size_t e : kept)
      if (e != i) trial.push_back(e);
    if (!is_planar(edge_subgraph(g, trial))) kept = std::move(trial);
  }
  return edge_subgraph(g, kept);
}

bool is_kuratowski_graph(const Graph& g) {
  const int n = g.vertex_count();
  auto regular = [&](int d) {
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) != d) return false;
    return true;
  };
  if (n == 5) return g.edge_count() == 10;
  if (n != 6 || g.edge_count() != 9 || !regular(3) || !is_connected(g)) return false;
  std::vector<int> side(6, -1);
  std::deque<Vertex> queue{0};
  side[0] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (side[u] < 0) {
        side[u] = 1 - side[v];
        queue.push_back(u);
      } else if (side[u] == side[v]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Follows a degree-2 path starting with the dart from -> next until a vertex of
// degree != 2 is reached. Returns the interior and the far end, or nullopt on a
// closed cycle.
std::optional<std::pair<std::vector<Vertex>, Vertex>> follow(const Graph& h, Vertex from, Vertex next) {
  std::vector<Vertex> interior;
  Vertex prev = from;
  Vertex cur = next;
  while (h.degree(cur) == 2) {
    if (cur == from) return std::nullopt;
    interior.push_back(cur);
    auto nbrs = h.neighbors(cur);
    Vertex step = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = step;
    if (interior.size() > static_cast<std::size_t>(h.vertex_count())) return std::nullopt;
  }
  return std::make_pair(std::move(interior), cur);
}

}  // namespace

Subdivision smooth(const Graph& h) {
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 1) throw Error(ErrorCode::NotASubdivision, "vertex " + std::to_string(v) + " has degree 1");
    if (h.degree(v) >= 3) branch.push_back(v);
  }
  std::map<Vertex, Vertex> core_of;
  for (std::size_t c = 0; c < branch.size(); ++c) core_of[branch[c]] = static_cast<Vertex>(c);

  std::map<std::pair<Vertex, Vertex>, Chain> by_pair;
  std::size_t covered = branch.size();
  for (Vertex b : branch) {
    for (Vertex x : h.neighbors(b)) {
      auto walked = follow(h, b, x);
      if (!walked) throw Error(ErrorCode::NotASubdivision, "closed chain");
      auto& [interior, end] = *walked;
      if (end == b) throw Error(ErrorCode::NotASubdivision, "chain returns to its start");
      Vertex cb = core_of.at(b), ce = core_of.at(end);
      if (cb > ce) continue;
      auto key = std::make_pair(cb, ce);
      if (by_pair.count(key)) throw Error(ErrorCode::NotASubdivision, "parallel chains");
      covered += interior.size();
      by_pair.emplace(key, Chain{b, end, std::move(interior)});
    }
  }
  std::size_t nonisolated = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 0) ++nonisolated;
  if (covered != nonisolated) throw Error(ErrorCode::NotASubdivision, "degree-2 cycle detached from branch vertices");

  std::vector<std::pair<Vertex, Vertex>> core_edges;
  for (const auto& [key, chain] : by_pair) core_edges.push_back(key);
  Subdivision out{build_graph(static_cast<int>(branch.size()), core_edges), std::move(branch), {}};
  if (!is_kuratowski_graph(out.core))
    throw Error(ErrorCode::NotASubdivision, "smoothing is neither K5 nor K3,3");
  // std::map iterates in sorted key order, which is the core edge order.
  for (auto& [key, chain] : by_pair) out.chains.push_back(std::move(chain));
  return out;
}

ChainPath chain_endpoints(const Graph& h, Vertex v) {
  if (!h.contains(v) || h.degree(v) != 2)
    throw Error(ErrorCode::NotAChainVertex, "vertex " + std::to_string(v) + " is not a chain vertex");
  auto nbrs = h.neighbors(v);
  auto left = follow(h, v, nbrs[0]);
  auto right = follow(h, v, nbrs[1]);
  if (!left || !right || left->second == v)
    throw Error(ErrorCode::NotAChainVertex, "vertex " + std::to_string(v) + " lies on a closed cycle");
  ChainPath out;
  out.u = left->second;
  out.w = right->second;
  out.path.push_back(out.u);
  out.path.insert(out.path.end(), left->first.rbegin(), left->first.rend());
  out.path.push_back(v);
  out.path.insert(out.path.end(), right->first.begin(), right->first.end());
  out.path.push_back(out.w);
  if (out.u > out.w) {
    std::swap(out.u, out.w);
    std::reverse(out.path.begin(), out.path.end());
  }
  out.index = static_cast<std::size_t>(std::find(out.path.begin(), out.path.end(), v) - out.path.begin());
  return out;
}

}  // namespace kleindraw
