#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace egp::detail {

struct LanczosResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Extreme Ritz value of a symmetric operator restricted to the orthogonal
/// complement of the unit vector `deflate`. Full reorthogonalization, so the
/// basis stays numerically orthogonal; fine for the few hundred iterations
/// this project needs. Throws std::runtime_error when the iteration budget
/// runs out before successive Ritz values settle under tol.
LanczosResult lanczos_extreme(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply, int dim,
    const Eigen::VectorXd& deflate, bool want_smallest, double tol, int max_iter,
    std::uint64_t seed = 12345);

}  // namespace egp::detail
