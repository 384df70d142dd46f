#include "lanczos.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace egp::detail {

namespace {

Eigen::VectorXd seeded_vector(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
  }
  return v;
}

void orthogonalize(Eigen::VectorXd& w, const std::vector<Eigen::VectorXd>& basis,
                   const Eigen::VectorXd& deflate) {
  for (int pass = 0; pass < 2; ++pass) {
    w -= deflate.dot(w) * deflate;
    for (const auto& v : basis) w -= v.dot(w) * v;
  }
}

}  // namespace

LanczosResult lanczos_extreme(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply, int dim,
    const Eigen::VectorXd& deflate, bool want_smallest, double tol, int max_iter,
    std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("lanczos needs dimension >= 2");

  std::vector<Eigen::VectorXd> basis;
  std::vector<double> alpha, beta;

  Eigen::VectorXd v = seeded_vector(dim, seed);
  orthogonalize(v, basis, deflate);
  const double norm0 = v.norm();
  if (norm0 < 1e-12) throw std::runtime_error("degenerate start vector");
  v /= norm0;

  double prev_ritz = want_smallest ? std::numeric_limits<double>::max()
                                   : std::numeric_limits<double>::lowest();

  for (int it = 0; it < max_iter; ++it) {
    basis.push_back(v);
    Eigen::VectorXd w = apply(v);
    const double a = v.dot(w);
    alpha.push_back(a);
    orthogonalize(w, basis, deflate);
    const double b = w.norm();

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    const int pick = want_smallest ? 0 : m - 1;
    const double ritz = es.eigenvalues()(pick);
    const double residual = b * std::abs(es.eigenvectors()(m - 1, pick));

    // Invariant subspace exhausted: the Ritz value is exact.
    if (b < 1e-13 || static_cast<int>(basis.size()) == dim - 1) {
      return {ritz, it + 1, true};
    }
    // For a symmetric operator the Ritz value is within `residual` of a true
    // eigenvalue, so this bounds the eigenvalue error directly.
    if (it > 0 && std::abs(ritz - prev_ritz) < tol &&
        residual < 10.0 * tol * std::max(1.0, std::abs(ritz))) {
      return {ritz, it + 1, true};
    }
    prev_ritz = ritz;

    beta.push_back(b);
    v = w / b;
  }
  throw std::runtime_error("lanczos did not converge within iteration budget");
}

}  // namespace egp::detail
