#include "egp/generators.hpp"

#include <stdexcept>

namespace egp {

Graph barbell(int m) {
  if (m < 2) throw std::invalid_argument("barbell needs clique size >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int base : {0, m}) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) edges.emplace_back(base + i, base + j);
    }
  }
  edges.emplace_back(m - 1, m);
  return Graph(2 * m, std::move(edges));
}

Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path needs >= 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, std::move(edges));
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, std::move(edges));
}

Graph complete_graph(int k) {
  if (k < 1) throw std::invalid_argument("complete graph needs >= 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return Graph(k, std::move(edges));
}

Graph balanced_binary_tree(int depth) {
  if (depth < 0) throw std::invalid_argument("tree depth must be >= 0");
  const int num_nodes = (1 << (depth + 1)) - 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; 2 * i + 2 < num_nodes; ++i) {
    edges.emplace_back(i, 2 * i + 1);
    edges.emplace_back(i, 2 * i + 2);
  }
  return Graph(num_nodes, std::move(edges));
}

}  // namespace egp
