#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kleindraw/graph.hpp"
#include "kleindraw/kuratowski.hpp"

namespace kleindraw {

/// General (signed) rotation system: a cyclic neighbour order per vertex plus
/// a sign per undirected edge, -1 marking a twisted edge.
///
/// Two systems compare equal only when every order matches literally; use
/// same_up_to_rotation() to ignore the starting point of each cycle.
class RotationSystem {
 public:
  RotationSystem() = default;

  // Throws InvalidRotationSystem unless every order is a permutation of the
  // vertex's neighbour set and every sign is +1 or -1.
  RotationSystem(Graph graph, std::vector<std::vector<Vertex>> orders, std::vector<int> signs);

  // Ascending neighbour orders, all signs +1.
  static RotationSystem sorted(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }

  std::span<const Vertex> rotation(Vertex v) const { return order_[v]; }
  // Edge index of the k-th dart around v.
  std::size_t rotation_edge(Vertex v, std::size_t k) const { return order_edge_[v][k]; }
  // Position of neighbour u inside rotation(v); u must be adjacent to v.
  std::size_t position(Vertex v, Vertex u) const;

  Vertex successor(Vertex v, Vertex u) const;
  Vertex predecessor(Vertex v, Vertex u) const;

  int sign(std::size_t edge) const { return sign_[edge]; }
  int sign(Vertex u, Vertex v) const;
  std::span<const std::int8_t> signs() const noexcept { return sign_; }
  int negative_edge_count() const noexcept;

  // In-place mutators; invariants are kept by construction.
  void switch_vertex(Vertex v);
  void set_sign(std::size_t edge, int s) { sign_[edge] = static_cast<std::int8_t>(s < 0 ? -1 : 1); }
  void rotate_to_front(Vertex v, Vertex first);
  // Caller guarantees `order` is a permutation of v's neighbours.
  void set_rotation(Vertex v, std::span<const Vertex> order);

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.graph_ == b.graph_ && a.order_ == b.order_ && a.sign_ == b.sign_;
  }

 private:
  void rebuild_positions(Vertex v);

  Graph graph_;
  std::vector<std::vector<Vertex>> order_;
  std::vector<std::vector<std::size_t>> order_edge_;
  // position_[v][r] = position in order_[v] of v's r-th smallest neighbour.
  std::vector<std::vector<std::uint32_t>> position_;
  std::vector<std::int8_t> sign_;
};

bool same_up_to_rotation(const RotationSystem& a, const RotationSystem& b);

RotationSystem switch_vertex(RotationSystem rs, Vertex v);
RotationSystem apply_switches(RotationSystem rs, std::span<const char> switched);

// Vertex v becomes perm[v]; orders and signs are carried along.
RotationSystem relabel(const RotationSystem& rs, std::span<const Vertex> perm);

// Restriction to the edges of `sub` (same vertex labels, subset of edges).
RotationSystem restrict_to(const RotationSystem& rs, const Graph& sub);

struct FormatResult {
  RotationSystem system;
  std::vector<char> switched;
};

/// Switch-invariant normal form.
///
/// Each vertex whose order, read from its smallest neighbour u, has
/// successor(u) > predecessor(u) is switched; every order is then rotated to
/// start at u. Requires minimum degree 3 (DegreeTooLow otherwise).
FormatResult format(const RotationSystem& rs);

// A dart step of a face walk: traverse tail -> head with the given orientation.
struct FaceStep {
  Vertex tail = 0;
  Vertex head = 0;
  std::size_t edge = 0;
  int orientation = 1;
};

/// Orbits of the face-walking map on (dart, orientation) states.
///
/// Each geometric face is traced twice, once per direction; mate[i] is the
/// orbit that traverses orbit i backwards.
struct FaceSet {
  std::vector<std::vector<FaceStep>> orbits;
  std::vector<std::size_t> mate;

  std::size_t face_count() const noexcept { return orbits.size() / 2; }
};

FaceSet trace_faces(const RotationSystem& rs);
// Orbit count only; allocation-free once `scratch` is sized.
int count_face_orbits(const RotationSystem& rs, std::vector<char>& scratch);

int euler_characteristic(const RotationSystem& rs);

// DisconnectedGraph if the graph is not connected.
bool is_balanced(const RotationSystem& rs);

// Minimum negative-edge count over all switch sets (TooLarge above 20 vertices).
int frustration(const RotationSystem& rs);

struct Equivalence {
  std::vector<Vertex> mapping;   // vertex of a -> vertex of b
  std::vector<char> switched;    // switch flags on a's vertices
};

/// Witness that switching `a` by `switched` and relabelling by `mapping` gives
/// `b` up to per-vertex rotation, or nullopt. Without relabelling the mapping
/// is the identity. Both systems need minimum degree 3.
std::optional<Equivalence> equivalent(const RotationSystem& a, const RotationSystem& b,
                                      bool allow_relabel);

/// Switch set aligning `a` to `b` (same graph) up to per-vertex rotation.
///
/// Unlike equivalent() this accepts degree-2 vertices, whose orientation is
/// decided by propagating the edge signs.
std::optional<std::vector<char>> align_switches(const RotationSystem& a, const RotationSystem& b);

struct SmoothedSystem {
  RotationSystem core;             // on branch vertices relabelled 0..k-1
  std::vector<Vertex> branch;      // core vertex -> original vertex
  std::vector<Chain> chains;       // indexed by core edge
};

/// Rotation system of a K5/K3,3 subdivision `h` (a subgraph of rs.graph())
/// with every chain replaced by one edge whose sign is the chain's sign
/// product. Branch orders are restrictions of rs's orders.
SmoothedSystem induced_smoothed(const RotationSystem& rs, const Graph& h);

}  // namespace kleindraw
