#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "egp/cayley.hpp"
#include "egp/locality.hpp"

using egp::CayleyGraph;
using egp::edge_ball;
using egp::infinite_ball;
using egp::LabelledBall;
using egp::labelled_isomorphic;
using egp::tree_like_radius;
using egp::vertex_ball;

TEST_SUITE("locality") {

TEST_CASE("zero-hop edge ball is just the edge") {
  const CayleyGraph g = CayleyGraph::build(5);
  const LabelledBall ball = edge_ball(g, 0, 0, 0);
  CHECK(ball.num_vertices() == 2);
  CHECK(ball.num_center_vertices == 2);
  // The two endpoints see each other through the s1 arc and its inverse.
  CHECK(ball.slot_successor[0][0] == 1);
  CHECK(ball.slot_successor[1][2] == 0);
  CHECK(ball.slot_successor[0][1] == -1);
}

TEST_CASE("two-hop edge ball has the 4-regular tree count at large moduli") {
  // 2 endpoints + 3 fresh neighbors each + 9 fresh second-shell each: 26.
  const CayleyGraph g19 = CayleyGraph::build(19);
  CHECK(edge_ball(g19, 0, 0, 2).num_vertices() == 26);
  CHECK(edge_ball(g19, 0, 1, 2).num_vertices() == 26);
}

TEST_CASE("four hops swallow the whole 24-node graph") {
  const CayleyGraph g3 = CayleyGraph::build(3);
  CHECK(vertex_ball(g3, 0, 4).num_vertices() == 24);
  CHECK(edge_ball(g3, 0, 0, 4).num_vertices() == 24);
}

TEST_CASE("identical balls are isomorphic; balls across moduli match per label") {
  const CayleyGraph g19 = CayleyGraph::build(19);
  const CayleyGraph g23 = CayleyGraph::build(23);
  const CayleyGraph g29 = CayleyGraph::build(29);
  for (int slot : {0, 1}) {
    const LabelledBall b19 = edge_ball(g19, 0, slot, 2);
    CHECK(labelled_isomorphic(b19, b19));
    CHECK(labelled_isomorphic(b19, edge_ball(g23, 0, slot, 2)));
    CHECK(labelled_isomorphic(b19, edge_ball(g29, 0, slot, 2)));
    CHECK(labelled_isomorphic(edge_ball(g23, 0, slot, 2), edge_ball(g29, 0, slot, 2)));
  }
}

TEST_CASE("small moduli do not match large ones") {
  const CayleyGraph g3 = CayleyGraph::build(3);
  const CayleyGraph g19 = CayleyGraph::build(19);
  CHECK_FALSE(labelled_isomorphic(edge_ball(g3, 0, 0, 2), edge_ball(g19, 0, 0, 2)));
}

TEST_CASE("homogeneity: balls agree at every base vertex") {
  const CayleyGraph g19 = CayleyGraph::build(19);
  const LabelledBall at_identity = edge_ball(g19, 0, 0, 2);
  for (int base : {1, 17, 123, 4000}) {
    CHECK(labelled_isomorphic(at_identity, edge_ball(g19, base, 0, 2)));
  }
}

TEST_CASE("tree-like radius closed form") {
  CHECK(tree_like_radius(19) == 3);  // log(18) / (2 log phi) is just above 3
  CHECK(tree_like_radius(2) == 0);   // log(1) = 0
  CHECK(tree_like_radius(23) == 3);
  CHECK_THROWS_AS(tree_like_radius(1), std::invalid_argument);
}

TEST_CASE("infinite ball sizes start 1, 5, 17") {
  CHECK(infinite_ball(0).num_vertices() == 1);
  // Identity plus 4 distinct generator images.
  CHECK(infinite_ball(1).num_vertices() == 5);
  CHECK(infinite_ball(2).num_vertices() == 17);
  CHECK_THROWS_AS(infinite_ball(13), std::invalid_argument);
  CHECK_THROWS_AS(infinite_ball(-1), std::invalid_argument);
}

TEST_CASE("balls at the identity match the infinite graph up to the radius") {
  for (std::int64_t n : {19, 23}) {
    const CayleyGraph g = CayleyGraph::build(n);
    const int radius = tree_like_radius(n);
    for (int r = 0; r <= radius; ++r) {
      CHECK(labelled_isomorphic(vertex_ball(g, 0, r), infinite_ball(r)));
    }
  }
  // Same guarantee at radius 2, via the vertex count alone.
  CHECK(vertex_ball(CayleyGraph::build(19), 0, 2).num_vertices() ==
        infinite_ball(2).num_vertices());
}

TEST_CASE("wrap-around appears within the diameter") {
  for (std::int64_t n : {19, 23}) {
    const CayleyGraph g = CayleyGraph::build(n);
    // By vertex transitivity the identity's eccentricity is the diameter.
    const auto dist = g.undirected().bfs_distances(0);
    const int diameter = *std::max_element(dist.begin(), dist.end());
    int differ_at = -1;
    for (int r = 1; r <= std::min(diameter, 12); ++r) {
      if (infinite_ball(r).num_vertices() != vertex_ball(g, 0, r).num_vertices()) {
        differ_at = r;
        break;
      }
    }
    CHECK(differ_at > tree_like_radius(n));
    CHECK(differ_at <= diameter);
  }
}

TEST_CASE("shell growth stays under the 4-regular tree rate") {
  const LabelledBall ball = infinite_ball(6);
  CHECK(ball.shell_size(0) == 1);
  CHECK(ball.shell_size(1) == 4);
  double bound = 4.0;
  for (int r = 2; r <= 6; ++r) {
    bound *= 3.0;
    CHECK(ball.shell_size(r) <= static_cast<int>(bound));
  }
}

}  // TEST_SUITE
