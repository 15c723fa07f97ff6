#pragma once

#include <cstddef>
#include <vector>

#include "kleindraw/graph.hpp"

namespace kleindraw {

// Maximal path through degree-2 vertices; `interior` runs from `from` to `to`.
struct Chain {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> interior;
};

struct Subdivision {
  Graph core;                  // K5 or K3,3 on vertices 0..k-1
  std::vector<Vertex> branch;  // core vertex -> vertex of h, ascending
  std::vector<Chain> chains;   // indexed by core edge; from = branch of the lower core end
};

/// Subgraph of a non-planar graph homeomorphic to K5 or K3,3.
///
/// Edges are probed for deletion in sorted order and dropped whenever the rest
/// stays non-planar, so the result is edge-minimal and deterministic. Vertex
/// labels are kept; vertices outside the subdivision are left isolated.
/// Throws GraphIsPlanar.
Graph kuratowski_subgraph(const Graph& g);

// True for K5 and K3,3 (up to isomorphism).
bool is_kuratowski_graph(const Graph& g);

/// Replaces every chain of `h` by a single core edge. Isolated vertices are
/// ignored. Throws NotASubdivision unless the smoothing is K5 or K3,3.
Subdivision smooth(const Graph& h);

struct ChainPath {
  Vertex u = 0;
  Vertex w = 0;
  std::vector<Vertex> path;  // u, interior..., w
  std::size_t index = 0;     // position of the queried vertex in path
};

// Chain through the degree-2 vertex v of h (NotAChainVertex otherwise),
// oriented from the smaller branch label.
ChainPath chain_endpoints(const Graph& h, Vertex v);

}  // namespace kleindraw
