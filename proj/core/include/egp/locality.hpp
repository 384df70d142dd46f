#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "egp/cayley.hpp"

namespace egp {

/// An r-ball around a vertex or an edge of a generator-labelled Cayley
/// graph, stored in canonical form: vertices are numbered in BFS discovery
/// order (centers first, expansion in slot order), and each vertex records
/// the canonical index reached by each generator slot, or -1 when that arc
/// leaves the ball. Two balls admit a label-respecting isomorphism anchored
/// at their centers exactly when these tables coincide, so comparison is
/// linear-time and never falls back to general graph isomorphism search.
struct LabelledBall {
  int radius = 0;
  int num_center_vertices = 1;  ///< 1 for a vertex ball, 2 for an edge ball
  std::vector<std::array<int, 4>> slot_successor;
  std::vector<int> distance;  ///< hops from the nearest center, per vertex

  int num_vertices() const { return static_cast<int>(slot_successor.size()); }
  /// Number of vertices at exactly the given distance from the center.
  int shell_size(int r) const;
};

/// Ball of `hops` around the vertex with the given BFS index.
LabelledBall vertex_ball(const CayleyGraph& g, int vertex_index, int hops);

/// Ball of `hops` around the slot-labelled edge leaving `source_index`
/// (hops = 2 gives the 2-hop edge neighborhood the curvature depends on).
LabelledBall edge_ball(const CayleyGraph& g, int source_index, int slot, int hops);

/// True when the anchored, label-respecting map between the balls is a
/// bijection preserving arcs.
bool labelled_isomorphic(const LabelledBall& b1, const LabelledBall& b2);

/// Largest integer r >= 0 with r < log(n-1) / (2 log((1+sqrt(5))/2)),
/// natural logarithm. Up to this radius the ball at the identity of the
/// mod-n Cayley graph matches the infinite one.
int tree_like_radius(std::int64_t n);

/// Ball around the identity of the Cayley graph of SL(2, Z) with the same
/// generators, computed over exact big integers (entries grow like Fibonacci
/// numbers with word length). radius <= 12 guards memory.
LabelledBall infinite_ball(int radius);

}  // namespace egp
