#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "egp/graph.hpp"
#include "egp/modular_group.hpp"

namespace egp {

/// One directed, generator-labelled edge g -> g*s of a Cayley graph.
/// `slot` indexes GeneratorSet::standard: 0 = s1, 1 = s2, 2 = s1^-1, 3 = s2^-1.
struct CayleyArc {
  int source = 0;
  int target = 0;
  int slot = 0;
};

/// Cay(SL(2, Z_n); S_n), built breadth-first from the identity ("node zero")
/// with neighbor expansion in the fixed slot order. Vertex indices are BFS
/// discovery order, so every vertex i > 0 is adjacent to some j < i; this
/// makes every index prefix induce a connected subgraph.
class CayleyGraph {
 public:
  static CayleyGraph build(std::int64_t n);

  std::int64_t modulus() const { return n_; }
  int num_nodes() const { return static_cast<int>(vertices_.size()); }
  /// Exactly 4 arcs per vertex, grouped by source in BFS order.
  const std::vector<CayleyArc>& arcs() const { return arcs_; }
  const ModMatrix& vertex(int index) const { return vertices_[index]; }
  std::optional<int> index_of(const ModMatrix& m) const;
  /// Target of the slot-labelled arc out of `source`.
  int step(int source, int slot) const { return arcs_[4 * source + slot].target; }

  /// Undirected multigraph view: the arc (u -> v, s) and its reverse
  /// (v -> u, s^-1) merge into one undirected edge, so each vertex's two
  /// s1/s2 arcs yield |E| = 2|V| edges, keeping multiplicity (n = 2 has
  /// genuine parallel edges).
  Graph undirected() const;
  /// Generator slot (0 = s1, 1 = s2) per edge of undirected(), same order.
  std::vector<int> undirected_edge_slots() const;

 private:
  std::int64_t n_ = 0;
  std::vector<ModMatrix> vertices_;
  std::vector<CayleyArc> arcs_;
  std::unordered_map<ModMatrix, int> index_;
};

/// Smallest n >= 2 with |SL(2, Z_n)| >= target_nodes. The order formula is
/// not monotone in n, so every candidate is checked.
std::int64_t select_n(std::int64_t target_nodes);

/// Induced sub-multigraph on the BFS index prefix {0..num_nodes-1} of a
/// Cayley graph; connected by the prefix property.
struct SlicedAdjacency {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::int64_t source_n = 0;

  Graph graph() const { return Graph(num_nodes, edges); }
};

SlicedAdjacency slice(const CayleyGraph& g, int target_nodes);

}  // namespace egp
