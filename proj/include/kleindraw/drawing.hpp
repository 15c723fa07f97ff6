#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kleindraw/graph.hpp"
#include "kleindraw/rotation.hpp"
#include "kleindraw/shift.hpp"

namespace kleindraw {

/// Straight-line drawing on the flat Klein bottle.
///
/// gamma[v] lies in [0,1)^2; delta[e] is the deck transformation of edge e
/// read from its lower endpoint, so the edge is the segment from gamma[u] to
/// apply_shift(delta[e], gamma[v]) for u < v.
struct Drawing {
  Graph graph;
  std::vector<Point> gamma;
  std::vector<KleinShift> delta;
  std::vector<char> fixed;

  Drawing() = default;
  explicit Drawing(Graph g);
};

// Shift of `edge` read from its endpoint `from`.
KleinShift oriented_shift(const Drawing& d, Vertex from, std::size_t edge);
void set_oriented_shift(Drawing& d, Vertex from, std::size_t edge, KleinShift s);

// Position of neighbour u in v's chart. Throws NotIncident.
Point rel_coord(const Drawing& d, Vertex v, Vertex u);

/// Folds gamma[v] back into the unit square and rewrites the shifts of v's
/// edges so that every neighbour sees the same unfolded geometry.
void normalize_vertex_in_place(Drawing& d, Vertex v);
Drawing normalize_vertex(Drawing d, Vertex v);

struct Segment {
  Point from;
  Point to;
};

// Unfolded segment of edge e in the chart of its lower endpoint.
Segment edge_segment(const Drawing& d, std::size_t edge);

inline constexpr double kCrossingEps = 1e-9;

/// Pairs of edges (i <= j) whose segments meet anywhere other than a shared
/// endpoint, checked against every deck translate that can reach the first
/// edge. An edge paired with itself means it hits one of its own translates.
std::vector<std::pair<std::size_t, std::size_t>> crossings(const Drawing& d, double eps = kCrossingEps);

/// Counter-clockwise order of the edge directions around every vertex; an
/// edge is twisted when its shift has odd a. Throws DegenerateAngles when two
/// edges leave a vertex in the same direction.
RotationSystem extract_rotation_system(const Drawing& d);

}  // namespace kleindraw

namespace kleindraw {

// Drawing with vertex v renamed to perm[v]; geometry is unchanged.
Drawing relabel(const Drawing& d, std::span<const Vertex> perm);

}  // namespace kleindraw
