#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kleindraw/drawing.hpp"
#include "kleindraw/error.hpp"
#include "kleindraw/kuratowski.hpp"
#include "kleindraw/omega.hpp"
#include "kleindraw/rotation.hpp"

namespace kleindraw {

struct BaseMatch {
  std::size_t record = 0;       // index into the database span
  std::vector<Vertex> phi;      // core vertex -> record vertex
  RotationSystem switched;      // full input system after the witness switches
  SmoothedSystem smoothed;      // smoothing of h (core, branch vertices, chains)
};

/// Finds the base embedding whose system is switch-equivalent (with
/// relabelling) to the smoothed system that `rs` induces on the subdivision
/// `h`, and switches the corresponding branch vertices of the full system.
/// Throws NoBaseMatch.
BaseMatch match_base(const RotationSystem& rs, const Graph& h, std::span<const EmbeddingRecord> omega);

struct BasePlacement {
  Drawing drawing;                       // branch vertices placed and fixed
  std::vector<KleinShift> chain_shifts;  // per chain, from chain.from to chain.to
};

// Copies the record's coordinates and edge shifts onto the branch vertices.
BasePlacement place_base(const Graph& g, const BaseMatch& match, const EmbeddingRecord& record);

/// Spreads every chain's interior evenly along the unfolded segment between
/// its endpoints, folding each point back into the square. Consecutive chain
/// edges get shifts whose composition is the chain's shift. Interior vertices
/// become fixed.
void place_chains(Drawing& d, std::span<const Chain> chains, std::span<const KleinShift> chain_shifts);

/// Switches vertices of `rs` so that its restriction to `h` literally matches
/// the angular orders and twists of the current drawing of `h`. Throws
/// InvalidRotationSystem when no switch set does.
RotationSystem align_to_drawing(const RotationSystem& rs, const Graph& h, const Drawing& d);

/// Face walks of the drawn subgraph, each step carrying the deck
/// transformation that places its tail in the walk's common chart.
struct FaceCharts {
  FaceSet faces;
  std::vector<std::vector<KleinShift>> chart;
  // (vertex, h-neighbour opening the corner) -> (orbit, step whose tail is the vertex)
  std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<std::size_t, std::size_t>>> corners;
};

// `h_system` must match the drawing (see align_to_drawing).
FaceCharts chart_faces(const Drawing& d, const RotationSystem& h_system);

/// Shifts for the edges of G joining two vertices of h without belonging to
/// h, read along the boundary of the face both corners open into.
void place_h_chords(Drawing& d, const RotationSystem& rs, const Graph& h);

struct FaceAssignment {
  std::vector<FaceStep> walk;                               // boundary of the host face
  std::vector<Vertex> bridge;                               // vertices placed with v
  Point point;                                              // folded face centroid
  std::vector<std::pair<std::size_t, KleinShift>> shifts;   // edge -> shift from its low end
};

/// Face of the drawn subgraph h that must host v's bridge, found from the
/// corners its attachment edges open into. Throws InvalidRotationSystem when
/// attachments disagree and DisconnectedGraph when the bridge has none.
FaceAssignment assign_face(const Drawing& d, const RotationSystem& rs, const Graph& h, Vertex v);

struct TutteResult {
  Drawing drawing;
  int sweeps = 0;
  double max_displacement = 0.0;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, Drawing partial)
      : Error(ErrorCode::NoConvergence, what), partial_(std::move(partial)) {}
  const Drawing& partial() const noexcept { return partial_; }

 private:
  Drawing partial_;
};

/// Gauss-Seidel barycentric sweeps over the free vertices, folding each moved
/// vertex back into the square. Stops once a sweep moves no vertex by eps or
/// more; throws NoConvergenceError after max_iter sweeps.
TutteResult tutte(Drawing d, double eps, int max_iter);

struct DrawOptions {
  double eps = 1e-7;
  int max_iter = 10000;
  double crossing_eps = kCrossingEps;
};

struct DrawResult {
  Drawing drawing;
  Graph kuratowski;   // extracted subdivision
  int record_id = 0;  // base embedding used
  int sweeps = 0;
};

/// Straight-line crossing-free drawing of a 3-connected non-planar graph on
/// the flat Klein bottle realizing `rs`.
///
/// Throws NotThreeConnected, GraphIsPlanar, NotKleinSystem (Euler
/// characteristic not 0, or balanced), NoBaseMatch, InvalidRotationSystem,
/// NoConvergence, or DrawingInvalid if the result fails validation.
DrawResult draw(const Graph& g, const RotationSystem& rs, std::span<const EmbeddingRecord> omega,
                const DrawOptions& options = {});

}  // namespace kleindraw
