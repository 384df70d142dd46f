#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "egp/graph.hpp"

namespace egp {

/// Node feature matrix: row u is the feature vector of node u.
using FeatureMatrix = Eigen::MatrixXd;

/// One GIN layer: h_u = phi((1 + eps) x_u + sum_{v in N(u)} x_v), with phi a
/// two-layer MLP (affine, rectifier, affine). Parallel edges contribute
/// multiplicity to the neighbor sum.
struct GinLayer {
  double epsilon = 0.0;
  Eigen::MatrixXd w1, w2;  // hidden x in, out x hidden
  Eigen::VectorXd b1, b2;

  int in_dim() const { return static_cast<int>(w1.cols()); }
  int out_dim() const { return static_cast<int>(w2.rows()); }

  /// Deterministic initialization: weights uniform in [-a, a) with
  /// a = sqrt(6 / (fan_in + fan_out)), biases zero, drawn from a
  /// mt19937_64 stream in w1-then-w2 row-major order.
  static GinLayer init(int in_dim, int hidden_dim, int out_dim, std::uint64_t seed,
                       double epsilon = 0.0);

  FeatureMatrix forward(const FeatureMatrix& x, const Graph& g) const;
};

enum class LayerGraph { kInput, kCayley };

/// Which graph each layer propagates over. The default interleaving runs the
/// input graph first, then the size-matched Cayley slice, alternating;
/// `cayley_first` flips the order.
struct EgpSchedule {
  std::vector<LayerGraph> layers;

  int size() const { return static_cast<int>(layers.size()); }
  static EgpSchedule alternating(int num_layers, bool cayley_first = false);
  static EgpSchedule input_only(int num_layers);
  static EgpSchedule cayley_only(int num_layers);
  /// "egp", "egp-cayley-first", "input", "cayley", or a pattern like "icic".
  static EgpSchedule parse(const std::string& text, int num_layers);
};

struct EgpOptions {
  int hidden_dim = 16;  ///< MLP hidden width and width between layers
  double epsilon = 0.0;
  std::uint64_t seed = 0;
};

/// The forward model: picks the smallest modulus whose Cayley graph covers
/// the input size, slices its BFS index prefix to exactly |V| nodes (input
/// node i is Cayley node i), and applies GIN layers per the schedule. Layer
/// weights all come from one seeded stream, so runs are reproducible.
class EgpModel {
 public:
  EgpModel(int num_nodes, int in_dim, EgpSchedule schedule, const EgpOptions& options);

  const Graph& cayley_slice() const { return cayley_slice_; }
  const EgpSchedule& schedule() const { return schedule_; }
  const std::vector<GinLayer>& layers() const { return layers_; }

  /// Runs the schedule; an empty schedule is the identity map.
  FeatureMatrix forward(const Graph& input_graph, const FeatureMatrix& x) const;

 private:
  EgpSchedule schedule_;
  std::vector<GinLayer> layers_;
  Graph cayley_slice_;
};

/// Full pass per the alternating schedule with T layers.
FeatureMatrix egp_forward(const FeatureMatrix& x, const Graph& input_graph, int num_layers,
                          const EgpOptions& options, bool cayley_first = false);

/// Training-free influence of node `source` on node `target`: Frobenius norm
/// of the finite-difference Jacobian block d h_target / d x_source, central
/// differences with the given step over each source coordinate.
double sensitivity_probe(const Graph& input_graph, const EgpSchedule& schedule, int source,
                         int target, const FeatureMatrix& base_features,
                         const EgpOptions& options, double step = 1e-4);

/// Default features: one-hot encoding of the node degree (dim = max degree + 1).
FeatureMatrix degree_one_hot(const Graph& g);

std::string to_csv_string(const FeatureMatrix& features);

}  // namespace egp
