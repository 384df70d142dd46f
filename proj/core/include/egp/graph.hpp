#pragma once

#include <span>
#include <utility>
#include <vector>

namespace egp {

/// Undirected multigraph on vertices 0..num_nodes-1. Repeated entries in the
/// edge list are parallel edges; degrees and neighbor lists count them with
/// multiplicity. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int num_nodes, std::vector<std::pair<int, int>> edges);

  int num_nodes() const { return num_nodes_; }
  /// Number of undirected edges, counting multiplicity.
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Neighbors of v with multiplicity, sorted ascending.
  std::span<const int> neighbors(int v) const;
  /// Neighbors of v without multiplicity, sorted ascending.
  std::span<const int> distinct_neighbors(int v) const;
  /// Degree counting multiplicity (self-loops are rejected at construction).
  int degree(int v) const;
  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

  int max_degree() const;
  int min_degree() const;
  /// True when every vertex has the same multiplicity-counting degree;
  /// that degree is written to *k when given.
  bool is_regular(int* k = nullptr) const;
  bool is_connected() const;

  /// BFS hop distances from source; -1 for unreachable vertices.
  std::vector<int> bfs_distances(int source) const;
  /// BFS distances cut off at max_hops (beyond: -1).
  std::vector<int> bfs_distances(int source, int max_hops) const;
  /// Longest shortest path; throws std::invalid_argument if disconnected.
  int diameter() const;

 private:
  int num_nodes_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_offsets_, adj_;            // CSR, with multiplicity
  std::vector<int> distinct_offsets_, distinct_;  // CSR, deduplicated
};

}  // namespace egp
