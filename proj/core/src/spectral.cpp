#include "egp/spectral.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "egp/dynamics.hpp"
#include "lanczos.hpp"

namespace egp {

namespace {

constexpr int kExactNodeLimit = 3000;
constexpr int kEnumerationNodeLimit = 24;

void require_connected(const Graph& g) {
  if (g.num_nodes() < 2) throw std::invalid_argument("graph needs at least 2 nodes");
  if (!g.is_connected()) {
    throw std::invalid_argument("graph is disconnected (lambda1 = 0)");
  }
}

Eigen::VectorXd laplacian_times(const Graph& g, const Eigen::VectorXd& x) {
  Eigen::VectorXd y(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v) {
    double acc = g.degree(v) * x[v];
    for (int w : g.neighbors(v)) acc -= x[w];
    y[v] = acc;
  }
  return y;
}

Eigen::VectorXd normalized_laplacian_times(const Graph& g, const Eigen::VectorXd& invsqrt,
                                           const Eigen::VectorXd& x) {
  Eigen::VectorXd y(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v) {
    double acc = 0.0;
    for (int w : g.neighbors(v)) acc += invsqrt[w] * x[w];
    y[v] = x[v] - invsqrt[v] * acc;
  }
  return y;
}

EigenGap eigen_gap_exact(const Graph& g) {
  const int n = g.num_nodes();
  if (n > kExactNodeLimit) {
    throw std::invalid_argument("graph too large for the dense eigensolver; use iterative mode");
  }
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd nlap = Eigen::MatrixXd::Identity(n, n);
  std::vector<double> invsqrt(n);
  for (int v = 0; v < n; ++v) invsqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  for (int v = 0; v < n; ++v) {
    lap(v, v) = g.degree(v);
    for (int w : g.neighbors(v)) {
      lap(v, w) -= 1.0;
      nlap(v, w) -= invsqrt[v] * invsqrt[w];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esn(nlap, Eigen::EigenvaluesOnly);
  return EigenGap{es.eigenvalues()(1), esn.eigenvalues()(1)};
}

EigenGap eigen_gap_iterative(const Graph& g, double tol) {
  const int n = g.num_nodes();
  const int max_iter = std::min(n + 10, 1000);

  // Laplacian: smallest positive eigenvalue = extreme of the operator on the
  // complement of the constant vector. Run Lanczos on c*I - L (largest there
  // maps to smallest of L) to keep the wanted end dominant.
  const double shift = 2.0 * g.max_degree() + 1.0;
  Eigen::VectorXd ones = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  auto shifted = [&](const Eigen::VectorXd& x) {
    return (shift * x - laplacian_times(g, x)).eval();
  };
  const double lambda1 =
      shift - detail::lanczos_extreme(shifted, n, ones, /*want_smallest=*/false, tol, max_iter).value;

  Eigen::VectorXd invsqrt(n), dsqrt(n);
  for (int v = 0; v < n; ++v) {
    dsqrt[v] = std::sqrt(static_cast<double>(g.degree(v)));
    invsqrt[v] = 1.0 / dsqrt[v];
  }
  Eigen::VectorXd null_vec = dsqrt / dsqrt.norm();  // kernel of the normalized Laplacian
  auto shifted_norm = [&](const Eigen::VectorXd& x) {
    return (2.0 * x - normalized_laplacian_times(g, invsqrt, x)).eval();
  };
  const double lambda1n =
      2.0 - detail::lanczos_extreme(shifted_norm, n, null_vec, /*want_smallest=*/false, tol, max_iter).value;

  return EigenGap{lambda1, lambda1n};
}

}  // namespace

std::vector<double> laplacian_apply(const Graph& g, std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.num_nodes()) {
    throw std::invalid_argument("function dimension does not match vertex count");
  }
  std::vector<double> out(f.size());
  for (int v = 0; v < g.num_nodes(); ++v) {
    double acc = g.degree(v) * f[v];
    for (int w : g.neighbors(v)) acc -= f[w];
    out[v] = acc;
  }
  return out;
}

EigenGap eigen_gap(const Graph& g, EigenMode mode, double tol, bool cross_check) {
  require_connected(g);
  const EigenGap gap =
      mode == EigenMode::kExact ? eigen_gap_exact(g) : eigen_gap_iterative(g, tol);
  if (cross_check) {
    // lambda'_i = 2 - 2 mu_i links the normalized Laplacian to the lazy walk
    // operator; the walk side is computed by an independent iteration.
    const double mu1 = walk_mu1(g, std::min(tol, 1e-10));
    const double from_walk = 2.0 - 2.0 * mu1;
    if (std::abs(from_walk - gap.lambda1_normalized) > 1e-8) {
      throw InternalConsistencyError(
          "normalized gap " + std::to_string(gap.lambda1_normalized) +
          " disagrees with walk spectrum value " + std::to_string(from_walk));
    }
  }
  return gap;
}

namespace {

// Shared subset scan for the two isoperimetric constants. Enumerates each
// vertex bipartition once by keeping the highest-index vertex out of A.
template <typename Ratio>
double enumerate_partitions(const Graph& g, Ratio ratio) {
  const int n = g.num_nodes();
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  if (n > kEnumerationNodeLimit) {
    throw std::invalid_argument("graph too large for exhaustive subset enumeration");
  }
  const auto& edges = g.edges();
  double best = std::numeric_limits<double>::max();
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    int boundary = 0;
    for (const auto& [u, v] : edges) {
      boundary += ((mask >> u) ^ (mask >> v)) & 1u;
    }
    best = std::min(best, ratio(mask, boundary));
  }
  return best;
}

}  // namespace

double cheeger_exact(const Graph& g) {
  const int n = g.num_nodes();
  return enumerate_partitions(g, [n](std::uint32_t mask, int boundary) {
    const int size = std::popcount(mask);
    return static_cast<double>(boundary) / std::min(size, n - size);
  });
}

double conductance_exact(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<double> deg(n);
  double vol = 0.0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    vol += deg[v];
  }
  return enumerate_partitions(g, [&](std::uint32_t mask, int boundary) {
    double vol_a = 0.0;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) vol_a += deg[v];
    }
    return boundary / std::min(vol_a, vol - vol_a);
  });
}

double conductance_upper_bound(double lambda1_normalized) {
  return std::sqrt(2.0 * lambda1_normalized);
}

DiameterBound diameter_and_mohar(const Graph& g, double lambda1) {
  require_connected(g);
  if (lambda1 <= 0.0) throw std::invalid_argument("lambda1 must be positive");
  const double delta = g.max_degree();
  const double nodes = g.num_nodes();
  const double raw = (delta + lambda1) / (4.0 * lambda1) * std::log(nodes - 1.0);
  const int bound = std::max(2 * static_cast<int>(std::ceil(raw)), 1);
  const int diam = g.diameter();
  if (diam > bound) {
    throw InternalConsistencyError("diameter " + std::to_string(diam) +
                                   " exceeds spectral bound " + std::to_string(bound));
  }
  return DiameterBound{diam, bound};
}

SpectralReport spectral_report(const Graph& g, EigenMode mode, double tol) {
  SpectralReport report;
  const EigenGap gap = eigen_gap(g, mode, tol);
  report.lambda1 = gap.lambda1;
  report.lambda1_normalized = gap.lambda1_normalized;
  if (g.num_nodes() <= kEnumerationNodeLimit) {
    report.cheeger_exact = cheeger_exact(g);
    report.conductance_exact = conductance_exact(g);
  }
  report.conductance_upper = conductance_upper_bound(gap.lambda1_normalized);
  report.cheeger_lower = gap.lambda1 / 2.0;
  report.cheeger_upper = g.max_degree() * report.conductance_upper;
  const DiameterBound db = diameter_and_mohar(g, gap.lambda1);
  report.diameter = db.diameter;
  report.mohar_bound = db.mohar_bound;
  report.max_degree = g.max_degree();
  report.num_nodes = g.num_nodes();
  report.num_edges = g.num_edges();
  return report;
}

std::string to_json_string(const SpectralReport& report) {
  nlohmann::json j;
  j["lambda1"] = report.lambda1;
  j["lambda1_normalized"] = report.lambda1_normalized;
  if (report.cheeger_exact) j["cheeger_exact"] = *report.cheeger_exact;
  if (report.conductance_exact) j["conductance_exact"] = *report.conductance_exact;
  j["cheeger_lower"] = report.cheeger_lower;
  j["cheeger_upper"] = report.cheeger_upper;
  j["conductance_upper"] = report.conductance_upper;
  j["diameter"] = report.diameter;
  j["mohar_bound"] = report.mohar_bound;
  j["max_degree"] = report.max_degree;
  j["num_nodes"] = report.num_nodes;
  j["num_edges"] = report.num_edges;
  j["log_base"] = report.log_base;
  return j.dump(2);
}

}  // namespace egp
