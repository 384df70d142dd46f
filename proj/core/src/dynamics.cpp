#include "egp/dynamics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "lanczos.hpp"

namespace egp {

WalkOperator::WalkOperator(const Graph& g) : graph_(g) {
  if (g.num_nodes() < 1) throw std::invalid_argument("empty graph");
  regular_ = g.is_regular(&degree_);
  inv_degree_.resize(g.num_nodes());
  stationary_.resize(g.num_nodes());
  double vol = 0.0;
  for (int v = 0; v < g.num_nodes(); ++v) {
    const int d = g.degree(v);
    if (d == 0) throw std::invalid_argument("walk operator needs minimum degree 1");
    inv_degree_[v] = 1.0 / d;
    vol += d;
  }
  for (int v = 0; v < g.num_nodes(); ++v) {
    stationary_[v] = regular_ ? 1.0 / g.num_nodes() : g.degree(v) / vol;
  }
}

int WalkOperator::regular_degree() const {
  if (!regular_) throw std::logic_error("graph is not regular");
  return degree_;
}

void WalkOperator::step_unchecked(std::span<const double> pi, std::span<double> out) const {
  const Graph& g = graph_;
  for (int v = 0; v < g.num_nodes(); ++v) out[v] = 0.5 * pi[v];
  for (int v = 0; v < g.num_nodes(); ++v) {
    const double send = 0.5 * pi[v] * inv_degree_[v];
    for (int w : g.neighbors(v)) out[w] += send;
  }
}

std::vector<double> WalkOperator::step(std::span<const double> pi) const {
  if (static_cast<int>(pi.size()) != num_nodes()) {
    throw std::invalid_argument("distribution size mismatch");
  }
  double sum = 0.0;
  for (double p : pi) {
    if (!(p >= -1e-12)) throw std::invalid_argument("distribution has negative mass");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("distribution does not sum to 1");
  }
  std::vector<double> out(pi.size());
  step_unchecked(pi, out);
  return out;
}

namespace {

double l1_deviation(std::span<const double> pi, std::span<const double> target) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) acc += std::abs(pi[i] - target[i]);
  return acc;
}

}  // namespace

MixingResult mixing_time(const Graph& g, std::span<const int> starts,
                         const MixingOptions& options) {
  if (!g.is_connected()) throw std::invalid_argument("mixing time needs a connected graph");
  if (!options.allow_irregular && !g.is_regular()) {
    throw std::invalid_argument(
        "mixing time is defined for regular graphs; set allow_irregular to use "
        "the degree-stationary extension");
  }
  const WalkOperator walk(g);
  const auto& target = walk.stationary();
  const int cap = options.cap_steps > 0 ? options.cap_steps : 10 * g.num_nodes();

  std::vector<int> all;
  if (starts.empty()) {
    all.resize(g.num_nodes());
    std::iota(all.begin(), all.end(), 0);
    starts = all;
  }
  for (int s : starts) {
    if (s < 0 || s >= g.num_nodes()) throw std::invalid_argument("start vertex out of range");
  }

  std::vector<std::vector<double>> current(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    current[i].assign(g.num_nodes(), 0.0);
    current[i][starts[i]] = 1.0;
  }

  MixingResult result;
  std::vector<double> next(g.num_nodes());
  for (int step = 0;; ++step) {
    double worst = 0.0;
    for (const auto& pi : current) worst = std::max(worst, l1_deviation(pi, target));
    result.trajectory.emplace_back(step, worst);
    if (worst <= 0.25) {
      result.mixing_time = step;
      result.worst_start_deviation = worst;
      return result;
    }
    if (step >= cap) {
      throw MixingCapExceeded("walk not mixed after " + std::to_string(cap) +
                              " steps (deviation " + std::to_string(worst) + ")");
    }
    for (auto& pi : current) {
      walk.step_unchecked(pi, next);
      pi.swap(next);
    }
  }
}

double walk_mu1(const Graph& g, double tol) {
  const int n = g.num_nodes();
  if (!g.is_connected()) throw std::invalid_argument("walk spectrum needs a connected graph");
  Eigen::VectorXd dsqrt(n), invsqrt(n);
  for (int v = 0; v < n; ++v) {
    dsqrt[v] = std::sqrt(static_cast<double>(g.degree(v)));
    invsqrt[v] = 1.0 / dsqrt[v];
  }
  Eigen::VectorXd top = dsqrt / dsqrt.norm();  // eigenvector for mu_0 = 1
  auto apply = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(n);
    for (int v = 0; v < n; ++v) {
      double acc = 0.0;
      for (int w : g.neighbors(v)) acc += invsqrt[w] * x[w];
      y[v] = 0.5 * x[v] + 0.5 * invsqrt[v] * acc;
    }
    return y;
  };
  return detail::lanczos_extreme(apply, n, top, /*want_smallest=*/false, tol,
                                 std::min(n + 10, 1000))
      .value;
}

std::string to_json_string(const MixingResult& result) {
  nlohmann::json j;
  j["mixing_time"] = result.mixing_time;
  j["worst_start_deviation"] = result.worst_start_deviation;
  auto traj = nlohmann::json::array();
  for (const auto& [step, dev] : result.trajectory) traj.push_back({step, dev});
  j["trajectory"] = std::move(traj);
  return j.dump(2);
}

std::string trajectory_csv(const MixingResult& result) {
  std::ostringstream out;
  out << "step,max_l1_deviation\n";
  for (const auto& [step, dev] : result.trajectory) out << step << ',' << dev << '\n';
  return out.str();
}

}  // namespace egp
