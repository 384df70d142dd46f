#pragma once

#include "egp/graph.hpp"

namespace egp {

/// Two copies of K_m joined by a single bridge edge between vertex m-1 and
/// vertex m. 2m vertices.
Graph barbell(int m);

/// Path on k vertices 0-1-...-k-1.
Graph path_graph(int k);

/// Cycle on k vertices.
Graph cycle_graph(int k);

/// Complete graph on k vertices.
Graph complete_graph(int k);

/// Balanced binary tree: root 0, node i has children 2i+1 and 2i+2;
/// 2^(depth+1) - 1 vertices (depth 0 is a single vertex).
Graph balanced_binary_tree(int depth);

}  // namespace egp
