#include "egp/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace egp {

Graph::Graph(int num_nodes, std::vector<std::pair<int, int>> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  if (num_nodes < 0) throw std::invalid_argument("negative node count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loops are not supported");
  }

  std::vector<int> deg(num_nodes_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  adj_offsets_.assign(num_nodes_ + 1, 0);
  for (int v = 0; v < num_nodes_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
  adj_.resize(adj_offsets_[num_nodes_]);
  std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < num_nodes_; ++v) {
    std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
  }

  distinct_offsets_.assign(num_nodes_ + 1, 0);
  distinct_.reserve(adj_.size());
  for (int v = 0; v < num_nodes_; ++v) {
    int prev = -1;
    for (int i = adj_offsets_[v]; i < adj_offsets_[v + 1]; ++i) {
      if (adj_[i] != prev) {
        distinct_.push_back(adj_[i]);
        prev = adj_[i];
      }
    }
    distinct_offsets_[v + 1] = static_cast<int>(distinct_.size());
  }
}

std::span<const int> Graph::neighbors(int v) const {
  return {adj_.data() + adj_offsets_[v],
          static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

std::span<const int> Graph::distinct_neighbors(int v) const {
  return {distinct_.data() + distinct_offsets_[v],
          static_cast<std::size_t>(distinct_offsets_[v + 1] - distinct_offsets_[v])};
}

int Graph::degree(int v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }

int Graph::multiplicity(int u, int v) const {
  auto nb = neighbors(u);
  auto [lo, hi] = std::equal_range(nb.begin(), nb.end(), v);
  return static_cast<int>(hi - lo);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < num_nodes_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (num_nodes_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < num_nodes_; ++v) d = std::min(d, degree(v));
  return d;
}

bool Graph::is_regular(int* k) const {
  if (num_nodes_ == 0) return false;
  const int d = degree(0);
  for (int v = 1; v < num_nodes_; ++v) {
    if (degree(v) != d) return false;
  }
  if (k != nullptr) *k = d;
  return true;
}

bool Graph::is_connected() const {
  if (num_nodes_ == 0) return false;
  const auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> Graph::bfs_distances(int source) const {
  return bfs_distances(source, num_nodes_);
}

std::vector<int> Graph::bfs_distances(int source, int max_hops) const {
  if (source < 0 || source >= num_nodes_) throw std::invalid_argument("bad BFS source");
  std::vector<int> dist(num_nodes_, -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    if (dist[u] >= max_hops) continue;
    for (int w : distinct_neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

int Graph::diameter() const {
  int diam = 0;
  for (int v = 0; v < num_nodes_; ++v) {
    const auto dist = bfs_distances(v);
    for (int d : dist) {
      if (d < 0) throw std::invalid_argument("diameter of a disconnected graph");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

}  // namespace egp
