#include "egp/cayley.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace egp {

CayleyGraph CayleyGraph::build(std::int64_t n) {
  const GeneratorSet gens = GeneratorSet::standard(n);
  const std::uint64_t expected = group_order(n);

  CayleyGraph g;
  g.n_ = n;
  g.vertices_.reserve(expected);
  g.arcs_.reserve(4 * expected);
  g.index_.reserve(expected * 2);

  g.vertices_.push_back(ModMatrix::identity(n));
  g.index_.emplace(g.vertices_[0], 0);

  // Queue is the vertex vector itself: discovery order == BFS order.
  for (int u = 0; u < static_cast<int>(g.vertices_.size()); ++u) {
    const ModMatrix from = g.vertices_[u];
    for (int slot = 0; slot < 4; ++slot) {
      const ModMatrix to = compose(from, gens.elements[slot]);
      auto [it, inserted] = g.index_.try_emplace(to, static_cast<int>(g.vertices_.size()));
      if (inserted) g.vertices_.push_back(to);
      assert(it->second != u && "generators are never the identity for n >= 2");
      g.arcs_.push_back(CayleyArc{u, it->second, slot});
    }
  }

  if (g.vertices_.size() != expected) {
    throw std::runtime_error("Cayley BFS found " + std::to_string(g.vertices_.size()) +
                             " vertices, order formula says " + std::to_string(expected));
  }
  return g;
}

std::optional<int> CayleyGraph::index_of(const ModMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph CayleyGraph::undirected() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(arcs_.size() / 2);
  for (const CayleyArc& arc : arcs_) {
    if (arc.slot < 2) edges.emplace_back(arc.source, arc.target);
  }
  return Graph(num_nodes(), std::move(edges));
}

std::vector<int> CayleyGraph::undirected_edge_slots() const {
  std::vector<int> slots;
  slots.reserve(arcs_.size() / 2);
  for (const CayleyArc& arc : arcs_) {
    if (arc.slot < 2) slots.push_back(arc.slot);
  }
  return slots;
}

std::int64_t select_n(std::int64_t target_nodes) {
  if (target_nodes < 1) throw std::invalid_argument("target node count must be >= 1");
  // group_order(n) >= n^3/2, so the scan ends well before this bound.
  for (std::int64_t n = 2;; ++n) {
    if (group_order(n) >= static_cast<std::uint64_t>(target_nodes)) return n;
  }
}

SlicedAdjacency slice(const CayleyGraph& g, int target_nodes) {
  if (target_nodes < 1 || target_nodes > g.num_nodes()) {
    throw std::invalid_argument("slice size out of range: " + std::to_string(target_nodes));
  }
  SlicedAdjacency out;
  out.num_nodes = target_nodes;
  out.source_n = g.modulus();
  for (const CayleyArc& arc : g.arcs()) {
    if (arc.slot < 2 && arc.source < target_nodes && arc.target < target_nodes) {
      out.edges.emplace_back(arc.source, arc.target);
    }
  }
  return out;
}

}  // namespace egp
