#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "egp/graph.hpp"

namespace egp {

/// The lazy random walk: stay put with probability 1/2, otherwise move to a
/// uniformly random incident edge. For a k-regular graph this is the matrix
/// (1/2) I + (1/(2k)) A; in general (1/2)(I + D^-1 A). Rows sum to 1.
class WalkOperator {
 public:
  explicit WalkOperator(const Graph& g);

  bool regular() const { return regular_; }
  /// Degree when the graph is regular; throws otherwise.
  int regular_degree() const;

  /// One step M * pi. Validates that pi is a probability distribution
  /// (non-negative, sums to 1 within 1e-10).
  std::vector<double> step(std::span<const double> pi) const;
  /// Same without validation, for inner loops.
  void step_unchecked(std::span<const double> pi, std::span<double> out) const;

  /// Limit distribution: uniform for regular graphs, degree / volume else.
  const std::vector<double>& stationary() const { return stationary_; }

  int num_nodes() const { return static_cast<int>(stationary_.size()); }

 private:
  Graph graph_;  // owned: the operator outlives any caller-supplied temporary
  bool regular_ = false;
  int degree_ = 0;
  std::vector<double> inv_degree_;
  std::vector<double> stationary_;
};

struct MixingCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixingResult {
  int mixing_time = 0;
  double worst_start_deviation = 0.0;  ///< max-over-starts deviation at mixing_time
  /// (step, max over starts of ||M^step pi - stationary||_1), step 0..mixing_time.
  std::vector<std::pair<int, double>> trajectory;
};

struct MixingOptions {
  /// Accept non-regular graphs, measuring deviation against the
  /// degree-proportional stationary distribution instead of uniform.
  bool allow_irregular = false;
  /// Iteration cap; <= 0 means the default 10 * |V|.
  int cap_steps = 0;
};

/// First step at which every requested start (point masses; all vertices
/// when `starts` is empty) has walked to within l1 distance 1/4 of the
/// stationary distribution. Maximizing over point masses suffices: the l1
/// deviation is convex over the simplex of start distributions.
/// Throws MixingCapExceeded when the cap is hit first.
MixingResult mixing_time(const Graph& g, std::span<const int> starts = {},
                         const MixingOptions& options = {});

/// Second-largest eigenvalue of the lazy walk operator, by Lanczos on the
/// degree-symmetrized kernel. Satisfies lambda'_1 = 2 - 2*mu_1.
double walk_mu1(const Graph& g, double tol = 1e-10);

std::string to_json_string(const MixingResult& result);
std::string trajectory_csv(const MixingResult& result);

}  // namespace egp
