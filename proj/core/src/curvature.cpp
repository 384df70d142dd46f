#include "egp/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace egp {

namespace {

void require_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.num_nodes() || v >= g.num_nodes() || !g.adjacent(u, v)) {
    throw std::invalid_argument("(" + std::to_string(u) + ", " + std::to_string(v) +
                                ") is not an edge");
  }
}

bool contains(std::span<const int> sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

double balanced_forman(const Graph& g, int u, int v) {
  require_edge(g, u, v);
  const auto nu = g.distinct_neighbors(u);
  const auto nv = g.distinct_neighbors(v);
  const int du = static_cast<int>(nu.size());
  const int dv = static_cast<int>(nv.size());
  if (std::min(du, dv) == 1) return 0.0;
  const int dmax = std::max(du, dv);
  const int dmin = std::min(du, dv);

  int triangles = 0;
  for (int k : nu) {
    if (k != u && k != v && contains(nv, k)) ++triangles;
  }

  // 4-cycles through (u,v) without diagonals: k ~ u, w ~ v, k ~ w, with
  // k outside N(v) u {v} and w outside N(u) u {u}.
  std::vector<int> side_u, side_v;
  for (int k : nu) {
    if (k != v && !contains(nv, k)) side_u.push_back(k);
  }
  for (int w : nv) {
    if (w != u && !contains(nu, w)) side_v.push_back(w);
  }
  int squares_u = 0, squares_v = 0, gamma_max = 0;
  std::unordered_map<int, int> cycles_through_w;
  for (int k : side_u) {
    int through_k = 0;
    for (int w : side_v) {
      if (g.adjacent(k, w)) {
        ++through_k;
        ++cycles_through_w[w];
      }
    }
    if (through_k > 0) {
      ++squares_u;
      gamma_max = std::max(gamma_max, through_k);
    }
  }
  for (const auto& [w, through_w] : cycles_through_w) {
    ++squares_v;
    gamma_max = std::max(gamma_max, through_w);
  }

  double ric = 2.0 / du + 2.0 / dv - 2.0 + 2.0 * triangles / dmax +
               static_cast<double>(triangles) / dmin;
  if (gamma_max > 0) {
    ric += static_cast<double>(squares_u + squares_v) / (gamma_max * dmax);
  }
  return ric;
}

double wasserstein1(const std::vector<double>& supply, const std::vector<double>& demand,
                    const std::vector<std::vector<double>>& cost) {
  const int m = static_cast<int>(supply.size());
  const int k = static_cast<int>(demand.size());
  if (static_cast<int>(cost.size()) != m) throw std::invalid_argument("cost rows mismatch");
  double total_supply = 0.0, total_demand = 0.0;
  for (double s : supply) total_supply += s;
  for (double d : demand) total_demand += d;
  if (std::abs(total_supply - total_demand) > 1e-9) {
    throw std::invalid_argument("transportation masses do not balance");
  }

  // Successive shortest paths on the bipartite residual network. Nodes:
  // 0 = source, 1..m = supplies, m+1..m+k = demands, m+k+1 = sink.
  const int source = 0, sink = m + k + 1, num_nodes = m + k + 2;
  struct Arc {
    int to;
    double cap;
    double cost;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs(num_nodes);
  auto add_arc = [&](int a, int b, double cap, double c) {
    arcs[a].push_back({b, cap, c, static_cast<int>(arcs[b].size())});
    arcs[b].push_back({a, 0.0, -c, static_cast<int>(arcs[a].size()) - 1});
  };
  for (int i = 0; i < m; ++i) add_arc(source, 1 + i, supply[i], 0.0);
  for (int j = 0; j < k; ++j) add_arc(1 + m + j, sink, demand[j], 0.0);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(cost[i].size()) != k) throw std::invalid_argument("cost cols mismatch");
    for (int j = 0; j < k; ++j) add_arc(1 + i, 1 + m + j, total_supply, cost[i][j]);
  }

  double remaining = total_supply;
  double transport_cost = 0.0;
  const int guard = 4 * (m + 1) * (k + 1) + 16;
  for (int round = 0; remaining > 1e-14; ++round) {
    if (round > guard) throw std::runtime_error("transportation solve did not terminate");
    // Bellman-Ford: residual arcs carry negative costs.
    std::vector<double> dist(num_nodes, std::numeric_limits<double>::max());
    std::vector<std::pair<int, int>> parent(num_nodes, {-1, -1});
    dist[source] = 0.0;
    for (int pass = 0; pass < num_nodes; ++pass) {
      bool changed = false;
      for (int a = 0; a < num_nodes; ++a) {
        if (dist[a] == std::numeric_limits<double>::max()) continue;
        for (int idx = 0; idx < static_cast<int>(arcs[a].size()); ++idx) {
          const Arc& arc = arcs[a][idx];
          if (arc.cap > 1e-14 && dist[a] + arc.cost < dist[arc.to] - 1e-15) {
            dist[arc.to] = dist[a] + arc.cost;
            parent[arc.to] = {a, idx};
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (parent[sink].first < 0) throw std::runtime_error("transportation network infeasible");

    double push = remaining;
    for (int node = sink; node != source;) {
      const auto [a, idx] = parent[node];
      push = std::min(push, arcs[a][idx].cap);
      node = a;
    }
    for (int node = sink; node != source;) {
      const auto [a, idx] = parent[node];
      Arc& arc = arcs[a][idx];
      arc.cap -= push;
      arcs[arc.to][arc.rev].cap += push;
      transport_cost += push * arc.cost;
      node = a;
    }
    remaining -= push;
  }
  return transport_cost;
}

double ollivier(const Graph& g, int u, int v, double idleness) {
  require_edge(g, u, v);
  if (!(idleness >= 0.0 && idleness < 1.0)) {
    throw std::invalid_argument("idleness must lie in [0, 1)");
  }

  // One-step measure at x: `idleness` at x plus (1 - idleness)/deg(x) per
  // incident edge, so a parallel edge doubles its neighbor's share.
  auto measure = [&](int x) {
    std::vector<std::pair<int, double>> entries;
    entries.emplace_back(x, idleness);
    const double per_edge = (1.0 - idleness) / g.degree(x);
    for (int y : g.distinct_neighbors(x)) {
      entries.emplace_back(y, per_edge * g.multiplicity(x, y));
    }
    return entries;
  };
  const auto mu = measure(u);
  const auto nv = measure(v);

  // Supports sit within one hop of u and v, so all transport distances are
  // at most 3; a truncated BFS from each source support point suffices.
  std::vector<double> supply, demand;
  std::vector<std::vector<double>> cost;
  for (const auto& [x, mass] : mu) supply.push_back(mass);
  for (const auto& [y, mass] : nv) demand.push_back(mass);
  for (const auto& [x, mass] : mu) {
    const auto dist = g.bfs_distances(x, 3);
    std::vector<double> row;
    for (const auto& [y, unused] : nv) {
      if (dist[y] < 0) throw std::logic_error("support point unreachable within 3 hops");
      row.push_back(dist[y]);
    }
    cost.push_back(std::move(row));
  }

  return 1.0 - wasserstein1(supply, demand, cost);
}

namespace {

int env_thread_count() {
  const char* raw = std::getenv("EGP_THREADS");
  if (raw == nullptr) return 1;
  const int parsed = std::atoi(raw);
  return parsed >= 1 ? parsed : 1;
}

CurvatureStats stats_of(const std::vector<EdgeCurvature>& per_edge,
                        double EdgeCurvature::* field) {
  CurvatureStats s;
  if (per_edge.empty()) return s;
  s.min = std::numeric_limits<double>::max();
  s.max = std::numeric_limits<double>::lowest();
  double sum = 0.0;
  for (const auto& e : per_edge) {
    const double value = e.*field;
    s.min = std::min(s.min, value);
    s.max = std::max(s.max, value);
    sum += value;
  }
  s.mean = sum / static_cast<double>(per_edge.size());
  return s;
}

}  // namespace

CurvatureReport curvature_report(const Graph& g, double idleness) {
  CurvatureReport report;
  const auto& edges = g.edges();
  report.per_edge.resize(edges.size());

  // Parallel edges share endpoints and therefore values; compute one entry
  // per distinct pair and fan out.
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_pair;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    by_pair[{std::min(u, v), std::max(u, v)}].push_back(i);
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(by_pair.size());
  for (const auto& [pair, unused] : by_pair) pairs.push_back(pair);

  std::vector<std::pair<double, double>> values(pairs.size());
  const int threads = std::min<int>(env_thread_count(), static_cast<int>(pairs.size()));
  auto worker = [&](int t) {
    for (std::size_t i = t; i < pairs.size(); i += threads) {
      const auto [u, v] = pairs[i];
      values[i] = {balanced_forman(g, u, v), ollivier(g, u, v, idleness)};
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t edge_index : by_pair[pairs[i]]) {
      const auto [u, v] = edges[edge_index];
      report.per_edge[edge_index] = {u, v, values[i].first, values[i].second};
    }
  }
  report.balanced_forman = stats_of(report.per_edge, &EdgeCurvature::balanced_forman);
  report.ollivier = stats_of(report.per_edge, &EdgeCurvature::ollivier);
  return report;
}

std::string to_json_string(const CurvatureReport& report) {
  nlohmann::json j;
  auto edges = nlohmann::json::array();
  for (const auto& e : report.per_edge) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"balanced_forman", e.balanced_forman},
                     {"ollivier", e.ollivier}});
  }
  j["per_edge"] = std::move(edges);
  j["balanced_forman_min"] = report.balanced_forman.min;
  j["balanced_forman_max"] = report.balanced_forman.max;
  j["balanced_forman_mean"] = report.balanced_forman.mean;
  j["ollivier_min"] = report.ollivier.min;
  j["ollivier_max"] = report.ollivier.max;
  j["ollivier_mean"] = report.ollivier.mean;
  return j.dump(2);
}

std::string to_csv_string(const CurvatureReport& report) {
  std::ostringstream out;
  out << "u,v,balanced_forman,ollivier\n";
  for (const auto& e : report.per_edge) {
    out << e.u << ',' << e.v << ',' << e.balanced_forman << ',' << e.ollivier << '\n';
  }
  return out.str();
}

}  // namespace egp
