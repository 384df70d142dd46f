#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "egp/cayley.hpp"
#include "egp/dynamics.hpp"
#include "egp/generators.hpp"
#include "egp/spectral.hpp"

using egp::CayleyGraph;
using egp::Graph;
using egp::MixingOptions;
using egp::WalkOperator;

TEST_SUITE("dynamics") {

TEST_CASE("rows of the walk operator are stochastic") {
  for (const Graph& g : {egp::cycle_graph(5), egp::barbell(4), CayleyGraph::build(2).undirected(),
                         CayleyGraph::build(3).undirected()}) {
    const WalkOperator walk(g);
    // Push each basis vector through; column sums of M^T are the row sums of M.
    for (int v = 0; v < g.num_nodes(); ++v) {
      std::vector<double> basis(g.num_nodes(), 0.0);
      basis[v] = 1.0;
      const auto next = walk.step(basis);
      double sum = 0.0;
      for (double p : next) {
        CHECK(p >= 0.0);
        sum += p;
      }
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("uniform distribution is stationary on regular graphs") {
  const Graph g = CayleyGraph::build(3).undirected();
  const std::vector<double> uniform(g.num_nodes(), 1.0 / g.num_nodes());
  const auto next = WalkOperator(g).step(uniform);
  for (int v = 0; v < g.num_nodes(); ++v) CHECK(next[v] == doctest::Approx(uniform[v]));
}

TEST_CASE("point mass on K2 spreads to (1/2, 1/2) in one step") {
  // Stay with probability 1/2, otherwise move to the single neighbor.
  const WalkOperator walk(egp::complete_graph(2));
  const auto next = walk.step(std::vector<double>{1.0, 0.0});
  CHECK(next[0] == doctest::Approx(0.5));
  CHECK(next[1] == doctest::Approx(0.5));
}

TEST_CASE("one step from a point mass on the 24-node graph") {
  const Graph g = CayleyGraph::build(3).undirected();
  const WalkOperator walk(g);
  std::vector<double> pi(g.num_nodes(), 0.0);
  pi[0] = 1.0;
  const auto next = walk.step(pi);
  CHECK(next[0] == doctest::Approx(0.5));
  for (int w : g.distinct_neighbors(0)) CHECK(next[w] == doctest::Approx(0.125));
}

TEST_CASE("invalid distributions are rejected") {
  const WalkOperator walk(egp::cycle_graph(4));
  CHECK_THROWS_AS(walk.step(std::vector<double>{0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(walk.step(std::vector<double>{1.5, -0.5, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(walk.step(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("mixing times of small graphs") {
  CHECK(egp::mixing_time(egp::complete_graph(5)).mixing_time <= 2);
  CHECK(egp::mixing_time(egp::complete_graph(2)).mixing_time <= 2);
}

TEST_CASE("strict mode rejects irregular graphs; the extension accepts them") {
  const Graph bb = egp::barbell(4);
  CHECK_THROWS_AS(egp::mixing_time(bb), std::invalid_argument);
  MixingOptions opt;
  opt.allow_irregular = true;
  CHECK(egp::mixing_time(bb, {}, opt).mixing_time > 0);
}

TEST_CASE("cap exceeded raises its own error type") {
  MixingOptions opt;
  opt.allow_irregular = true;
  opt.cap_steps = 3;
  CHECK_THROWS_AS(egp::mixing_time(egp::barbell(8), {}, opt), egp::MixingCapExceeded);
}

TEST_CASE("deviation trajectory is non-increasing") {
  for (const Graph& g : {CayleyGraph::build(3).undirected(), egp::cycle_graph(9)}) {
    const auto result = egp::mixing_time(g);
    for (std::size_t i = 1; i < result.trajectory.size(); ++i) {
      CHECK(result.trajectory[i].second <= result.trajectory[i - 1].second + 1e-10);
    }
    CHECK(result.worst_start_deviation <= 0.25);
    if (result.mixing_time >= 1) {
      CHECK(result.trajectory[result.mixing_time - 1].second > 0.25);
    }
  }
}

TEST_CASE("barbell mixing grows superlinearly; Cayley mixing stays small") {
  MixingOptions opt;
  opt.allow_irregular = true;
  opt.cap_steps = 20000;
  // Clique interior and bridge endpoint cover the two start classes.
  auto bb_mixing = [&](int m) {
    const std::vector<int> starts{0, m - 1};
    return egp::mixing_time(egp::barbell(m), starts, opt).mixing_time;
  };
  const int t6 = bb_mixing(6);
  const int t14 = bb_mixing(14);
  // Pilot run gave 56 and 289; superlinear means the ratio beats 14/6.
  CHECK(t14 > t6 * (14.0 / 6.0) * 1.5);

  const int cayley120 = egp::mixing_time(CayleyGraph::build(5).undirected()).mixing_time;
  CHECK(cayley120 <= 25);  // pilot: 20
}

TEST_CASE("walk spectrum matches the normalized Laplacian gap") {
  for (const Graph& g : {CayleyGraph::build(3).undirected(), egp::path_graph(6),
                         egp::barbell(5), CayleyGraph::build(7).undirected()}) {
    const double mu1 = egp::walk_mu1(g);
    const auto gap = egp::eigen_gap(g, egp::EigenMode::kExact);
    CHECK(std::abs(gap.lambda1_normalized - (2.0 - 2.0 * mu1)) < 1e-8);
  }
}

TEST_CASE("trajectory serialization") {
  const auto result = egp::mixing_time(egp::complete_graph(4));
  const std::string csv = egp::trajectory_csv(result);
  CHECK(csv.rfind("step,max_l1_deviation\n", 0) == 0);
  const std::string json = egp::to_json_string(result);
  CHECK(json.find("\"mixing_time\"") != std::string::npos);
}

}  // TEST_SUITE
