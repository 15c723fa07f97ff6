#pragma once

#include <string>
#include <vector>

#include "kleindraw/drawing.hpp"

namespace kleindraw {

/// Pieces of the edge's unfolded segment cut at the integer grid lines and
/// folded back into the unit square, in order from the low endpoint.
std::vector<Segment> clipped_edge(const Drawing& d, std::size_t edge);

/// SVG picture of the fundamental square with its side identifications.
/// Edges become `line.edge` elements, one per clipped piece; vertices are
/// labelled circles. With copies > 1 the surrounding deck translates out to
/// distance copies-1 are drawn as a `ghost` layer.
std::string render_svg(const Drawing& d, int copies = 1);

}  // namespace kleindraw
