#include <benchmark/benchmark.h>

#include "egp/cayley.hpp"
#include "egp/curvature.hpp"
#include "egp/dynamics.hpp"
#include "egp/generators.hpp"
#include "egp/propagation.hpp"
#include "egp/spectral.hpp"

namespace {

void BM_BuildCayley(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egp::CayleyGraph::build(n));
  }
  state.counters["nodes"] = static_cast<double>(egp::group_order(n));
}
BENCHMARK(BM_BuildCayley)->Arg(5)->Arg(11)->Arg(19)->Arg(29);

void BM_EigenGapIterative(benchmark::State& state) {
  const egp::Graph g = egp::CayleyGraph::build(state.range(0)).undirected();
  for (auto _ : state) {
    benchmark::DoNotOptimize(egp::eigen_gap(g, egp::EigenMode::kIterative, 1e-8,
                                            /*cross_check=*/false));
  }
}
BENCHMARK(BM_EigenGapIterative)->Arg(5)->Arg(11);

void BM_EigenGapExact(benchmark::State& state) {
  const egp::Graph g = egp::CayleyGraph::build(state.range(0)).undirected();
  for (auto _ : state) {
    benchmark::DoNotOptimize(egp::eigen_gap(g, egp::EigenMode::kExact, 1e-10,
                                            /*cross_check=*/false));
  }
}
BENCHMARK(BM_EigenGapExact)->Arg(5)->Arg(11);

void BM_OllivierEdge(benchmark::State& state) {
  const egp::Graph g = egp::CayleyGraph::build(state.range(0)).undirected();
  const auto [u, v] = g.edges()[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(egp::ollivier(g, u, v, 0.5));
  }
}
BENCHMARK(BM_OllivierEdge)->Arg(5)->Arg(19);

void BM_BalancedFormanEdge(benchmark::State& state) {
  const egp::Graph g = egp::CayleyGraph::build(state.range(0)).undirected();
  const auto [u, v] = g.edges()[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(egp::balanced_forman(g, u, v));
  }
}
BENCHMARK(BM_BalancedFormanEdge)->Arg(5)->Arg(19);

void BM_WalkStep(benchmark::State& state) {
  const egp::Graph g = egp::CayleyGraph::build(state.range(0)).undirected();
  const egp::WalkOperator walk(g);
  std::vector<double> pi(g.num_nodes(), 0.0), out(g.num_nodes(), 0.0);
  pi[0] = 1.0;
  for (auto _ : state) {
    walk.step_unchecked(pi, out);
    pi.swap(out);
    benchmark::DoNotOptimize(pi.data());
  }
}
BENCHMARK(BM_WalkStep)->Arg(11)->Arg(19);

void BM_EgpForward(benchmark::State& state) {
  const egp::Graph g = egp::barbell(state.range(0));
  const egp::FeatureMatrix x = egp::degree_one_hot(g);
  egp::EgpOptions options;
  options.hidden_dim = 32;
  const egp::EgpModel model(g.num_nodes(), static_cast<int>(x.cols()),
                            egp::EgpSchedule::alternating(6), options);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.forward(g, x));
  }
}
BENCHMARK(BM_EgpForward)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
