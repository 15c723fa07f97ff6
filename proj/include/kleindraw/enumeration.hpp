#pragma once

#include <cstdint>
#include <vector>

#include "kleindraw/graph.hpp"
#include "kleindraw/rotation.hpp"

namespace kleindraw {

// Flattened comparison key: per vertex its degree, then 2*u + (edge twisted)
// for each neighbour u in rotation order.
using SystemKey = std::vector<int>;

SystemKey system_key(const RotationSystem& rs);

/// Lexicographically smallest format() over every relabelling of the
/// vertices. Invariant under relabelling and switching. TooLarge above 8
/// vertices; DegreeTooLow below minimum degree 3.
RotationSystem canonical_form(const RotationSystem& rs);

// 2^m * prod (deg(v) - 1)!; TooLarge if the value does not fit in 64 bits.
std::uint64_t labelled_upper_bound(const Graph& g);

struct EnumerationOptions {
  // Restrict sign masks to popcount <= ceil(m/2).
  bool half_masks = false;
  // Mask ranges are split across this many workers.
  int threads = 1;
};

struct EnumerationResult {
  // Canonical systems with Euler characteristic 0, sorted by key.
  std::vector<RotationSystem> all;
  // Those reached from the all-positive sign mask.
  std::vector<RotationSystem> false_positives;

  // all minus false_positives: the Klein-bottle embeddings.
  std::vector<RotationSystem> klein() const;
};

/// Exhaustive enumeration of the unlabelled embeddings with Euler
/// characteristic 0.
///
/// Walks every sign mask (bit i twists the i-th edge in sorted order) and
/// every tuple of per-vertex orders that start at the smallest neighbour.
/// Requires a connected graph with at most 8 vertices and minimum degree 3.
EnumerationResult enumerate_embeddings(const Graph& g, const EnumerationOptions& options = {});

}  // namespace kleindraw
