#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "egp/graph.hpp"

namespace egp {

/// Thrown when a computed quantity violates an identity it is guaranteed to
/// satisfy (e.g. diameter exceeding its spectral upper bound).
struct InternalConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lf(v) = deg(v) f(v) - sum_{vw in E} f(w); parallel edges count with
/// multiplicity in both the degree and the sum.
std::vector<double> laplacian_apply(const Graph& g, std::span<const double> f);

enum class EigenMode { kExact, kIterative };

struct EigenGap {
  double lambda1 = 0.0;             ///< smallest positive Laplacian eigenvalue
  double lambda1_normalized = 0.0;  ///< same for the normalized Laplacian
};

/// Smallest positive eigenvalues of the Laplacian and normalized Laplacian.
/// Exact mode runs a full dense symmetric solve (graphs up to ~3000 nodes);
/// iterative mode runs Lanczos on the constant-vector-deflated operators,
/// converged when successive Ritz values differ by < tol. The normalized gap
/// is cross-checked against 2 - 2*mu_1 of the lazy walk operator; a mismatch
/// beyond 1e-8 raises InternalConsistencyError.
EigenGap eigen_gap(const Graph& g, EigenMode mode, double tol = 1e-10,
                   bool cross_check = true);

/// Exact Cheeger constant h(G) = min |dA| / |A| over 0 < |A| <= |V|/2 by
/// subset enumeration with complement pruning. Requires |V| <= 24; boundary
/// counts edge multiplicity.
double cheeger_exact(const Graph& g);

/// Exact conductance phi(G) = min |dA| / vol(A) over 0 < vol(A) <= vol(G)/2,
/// same enumeration bound.
double conductance_exact(const Graph& g);

/// Upper bound sqrt(2 * lambda'_1) for the conductance.
double conductance_upper_bound(double lambda1_normalized);

struct DiameterBound {
  int diameter = 0;
  int mohar_bound = 0;
};

/// Diameter by all-sources BFS together with the spectral upper bound
///   2 * ceil((max_degree + lambda1) / (4 lambda1) * ln(|V| - 1)),
/// natural logarithm, clamped to >= 1 for |V| >= 2 (ln(1) = 0 would make the
/// 2-node bound vacuously smaller than any diameter). The bound is checked
/// against the diameter; violation raises InternalConsistencyError.
DiameterBound diameter_and_mohar(const Graph& g, double lambda1);

struct SpectralReport {
  double lambda1 = 0.0;
  double lambda1_normalized = 0.0;
  std::optional<double> cheeger_exact;
  std::optional<double> conductance_exact;
  double cheeger_lower = 0.0;       ///< lambda1 / 2 <= h(G)
  double cheeger_upper = 0.0;       ///< h(G) <= max_degree * sqrt(2 lambda'_1)
  double conductance_upper = 0.0;   ///< phi(G) <= sqrt(2 lambda'_1)
  int diameter = 0;
  int mohar_bound = 0;
  int max_degree = 0;
  int num_nodes = 0;
  int num_edges = 0;
  std::string log_base = "natural";
};

/// Full report; exact Cheeger/conductance are filled in when |V| <= 24.
SpectralReport spectral_report(const Graph& g, EigenMode mode, double tol = 1e-10);

std::string to_json_string(const SpectralReport& report);

}  // namespace egp
