#pragma once

#include "kleindraw/graph.hpp"
#include "kleindraw/rotation.hpp"

namespace kleindraw {

struct GridEmbedding {
  Graph graph;
  RotationSystem system;
};

/// m x n square grid wrapped on the Klein bottle.
///
/// Vertex i*n + j sits in column i (0 <= i < m, along x, the direction whose
/// sides are glued with a flip) and row j (along y). Leaving column m-1 to the
/// right enters column 0 at row n-1-j through a twisted edge; rows wrap
/// without a twist. Orders are (right, up, left, down). Throws BadDimensions
/// for m < 2, n < 2, or sizes where the wrap would create parallel edges
/// (n < 3, or m = 2 with n odd).
GridEmbedding klein_grid(int m, int n);

}  // namespace kleindraw
