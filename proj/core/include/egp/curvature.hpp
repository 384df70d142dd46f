#pragma once

#include <string>
#include <vector>

#include "egp/graph.hpp"

namespace egp {

/// Balanced Forman curvature of the edge (u, v), from triangle and 4-cycle
/// counts in the 2-hop neighborhood:
///
///   Ric(u,v) = 2/d_u + 2/d_v - 2 + 2|T|/d_max + |T|/d_min
///              + (|Sq_u| + |Sq_v|) / (gamma_max * d_max)
///
/// where T are the common neighbors, Sq_u the neighbors of u on a 4-cycle
/// through (u,v) without diagonals, and gamma_max the largest number of such
/// 4-cycles through one node. Edges with an endpoint of degree 1 get 0.
/// Parallel edges are collapsed for this computation (the quantity is
/// defined on the underlying simple graph); an edge on a doubled cycle then
/// reads degree 2 per endpoint and comes out flat.
double balanced_forman(const Graph& g, int u, int v);

/// Ollivier curvature kappa(u,v) = 1 - W1(mu_u, mu_v) for an edge (u,v),
/// where mu_x places `idleness` at x and (1 - idleness)/deg(x) on each
/// incident edge, multiplicity-weighted. W1 is solved exactly as a small
/// transportation problem with shortest-path costs (supports live within one
/// hop of the endpoints, so a 3-hop truncated BFS covers every pair).
/// The default idleness 1/2 matches the lazy walk measure.
double ollivier(const Graph& g, int u, int v, double idleness = 0.5);

/// Exact optimal-transport cost between two point distributions given the
/// cost of moving from source i to sink j. Masses must balance.
double wasserstein1(const std::vector<double>& supply, const std::vector<double>& demand,
                    const std::vector<std::vector<double>>& cost);

struct EdgeCurvature {
  int u = 0;
  int v = 0;
  double balanced_forman = 0.0;
  double ollivier = 0.0;
};

struct CurvatureStats {
  double min = 0.0, max = 0.0, mean = 0.0;
};

struct CurvatureReport {
  std::vector<EdgeCurvature> per_edge;  ///< in graph edge-list order
  CurvatureStats balanced_forman;
  CurvatureStats ollivier;
};

/// Both curvatures for every edge. Per-edge work is independent; honors the
/// EGP_THREADS environment variable, output order fixed by edge index.
CurvatureReport curvature_report(const Graph& g, double idleness = 0.5);

std::string to_json_string(const CurvatureReport& report);
std::string to_csv_string(const CurvatureReport& report);

}  // namespace egp
