#include "egp/locality.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <stdexcept>

namespace egp {

namespace {

/// Canonical BFS over any labelled graph given by a slot-step function.
/// Vertices are keyed by opaque ids; `step(id, slot)` returns the neighbor.
template <typename Id, typename Step>
LabelledBall build_ball(const std::vector<Id>& centers, int hops, Step step) {
  LabelledBall ball;
  ball.radius = hops;
  ball.num_center_vertices = static_cast<int>(centers.size());

  std::map<Id, int> index;
  std::vector<Id> order;
  for (const Id& c : centers) {
    if (index.emplace(c, static_cast<int>(order.size())).second) {
      order.push_back(c);
      ball.distance.push_back(0);
    }
  }
  for (int head = 0; head < static_cast<int>(order.size()); ++head) {
    if (ball.distance[head] >= hops) continue;
    const Id current = order[head];
    for (int slot = 0; slot < 4; ++slot) {
      const Id next = step(current, slot);
      if (index.emplace(next, static_cast<int>(order.size())).second) {
        order.push_back(next);
        ball.distance.push_back(ball.distance[head] + 1);
      }
    }
  }

  ball.slot_successor.resize(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    for (int slot = 0; slot < 4; ++slot) {
      auto it = index.find(step(order[i], slot));
      ball.slot_successor[i][slot] = it == index.end() ? -1 : it->second;
    }
  }
  return ball;
}

}  // namespace

int LabelledBall::shell_size(int r) const {
  int count = 0;
  for (int d : distance) count += (d == r) ? 1 : 0;
  return count;
}

LabelledBall vertex_ball(const CayleyGraph& g, int vertex_index, int hops) {
  if (vertex_index < 0 || vertex_index >= g.num_nodes()) {
    throw std::invalid_argument("vertex index out of range");
  }
  if (hops < 0) throw std::invalid_argument("hops must be >= 0");
  return build_ball<int>({vertex_index}, hops,
                         [&](int v, int slot) { return g.step(v, slot); });
}

LabelledBall edge_ball(const CayleyGraph& g, int source_index, int slot, int hops) {
  if (source_index < 0 || source_index >= g.num_nodes() || slot < 0 || slot > 3) {
    throw std::invalid_argument("edge is not in the graph");
  }
  if (hops < 0) throw std::invalid_argument("hops must be >= 0");
  const int target = g.step(source_index, slot);
  return build_ball<int>({source_index, target}, hops,
                         [&](int v, int s) { return g.step(v, s); });
}

bool labelled_isomorphic(const LabelledBall& b1, const LabelledBall& b2) {
  return b1.num_center_vertices == b2.num_center_vertices &&
         b1.slot_successor == b2.slot_successor;
}

int tree_like_radius(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  const double limit =
      std::log(static_cast<double>(n - 1)) / (2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0));
  int r = static_cast<int>(std::floor(limit));
  if (static_cast<double>(r) == limit) --r;  // strict inequality
  return std::max(r, 0);
}

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::array<BigInt, 4>;  // row-major a b c d, det 1 over Z

BigMatrix multiply(const BigMatrix& g, const BigMatrix& h) {
  return BigMatrix{g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3],
                   g[2] * h[0] + g[3] * h[2], g[2] * h[1] + g[3] * h[3]};
}

}  // namespace

LabelledBall infinite_ball(int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (radius > 12) {
    throw std::invalid_argument("infinite ball radius capped at 12 (ball grows ~4 * 3^(r-1))");
  }
  const BigMatrix identity{1, 0, 0, 1};
  const std::array<BigMatrix, 4> generators{
      BigMatrix{1, 1, 0, 1},    // s1
      BigMatrix{1, 0, 1, 1},    // s2
      BigMatrix{1, -1, 0, 1},   // s1^-1
      BigMatrix{1, 0, -1, 1}};  // s2^-1
  return build_ball<BigMatrix>({identity}, radius, [&](const BigMatrix& m, int slot) {
    return multiply(m, generators[slot]);
  });
}

}  // namespace egp
