#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace kleindraw {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the vertices 0..n-1.
///
/// Edges are kept sorted, so an edge's index is its rank in lexicographic
/// (u, v) order. Values are immutable once built.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // Neighbours of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const noexcept;

  bool has_edge(Vertex u, Vertex v) const noexcept { return edge_index(u, v).has_value(); }
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const noexcept;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

 private:
  friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<std::size_t>> adj_edge_;  // parallel to adj_
};

// Throws SelfLoop, VertexOutOfRange or DuplicateEdge.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

// "K5" or "K33" (parts {0,1,2} and {3,4,5}); anything else is UnknownName.
Graph make_named(std::string_view name);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// The subgraph induced by an edge subset; vertex labels are kept.
Graph edge_subgraph(const Graph& g, std::span<const std::size_t> edge_ids);

// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);

// True iff g has more than k vertices and stays connected after removing any
// k-1 of them. Exhaustive over vertex subsets.
bool is_k_connected(const Graph& g, int k);

// Boyer-Myrvold planarity test.
bool is_planar(const Graph& g);

}  // namespace kleindraw
