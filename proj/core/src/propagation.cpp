#include "egp/propagation.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "egp/cayley.hpp"

namespace egp {

namespace {

class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [-a, a), from the top 53 bits so the mapping is fixed
  /// across platforms (distribution wrappers are implementation-defined).
  double symmetric(double a) {
    const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return (2.0 * unit - 1.0) * a;
  }

  void fill(Eigen::MatrixXd& m, double a) {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) m(r, c) = symmetric(a);
    }
  }

 private:
  std::mt19937_64 rng_;
};

GinLayer init_from_stream(int in_dim, int hidden_dim, int out_dim, UniformStream& stream,
                          double epsilon) {
  if (in_dim < 1 || hidden_dim < 1 || out_dim < 1) {
    throw std::invalid_argument("layer dimensions must be positive");
  }
  GinLayer layer;
  layer.epsilon = epsilon;
  layer.w1.resize(hidden_dim, in_dim);
  layer.w2.resize(out_dim, hidden_dim);
  stream.fill(layer.w1, std::sqrt(6.0 / (in_dim + hidden_dim)));
  stream.fill(layer.w2, std::sqrt(6.0 / (hidden_dim + out_dim)));
  layer.b1 = Eigen::VectorXd::Zero(hidden_dim);
  layer.b2 = Eigen::VectorXd::Zero(out_dim);
  return layer;
}

void require_finite(const FeatureMatrix& x) {
  if (!x.allFinite()) throw std::invalid_argument("features contain non-finite entries");
}

}  // namespace

GinLayer GinLayer::init(int in_dim, int hidden_dim, int out_dim, std::uint64_t seed,
                        double epsilon) {
  UniformStream stream(seed);
  return init_from_stream(in_dim, hidden_dim, out_dim, stream, epsilon);
}

FeatureMatrix GinLayer::forward(const FeatureMatrix& x, const Graph& g) const {
  if (x.rows() != g.num_nodes()) throw std::invalid_argument("feature rows != node count");
  if (x.cols() != in_dim()) throw std::invalid_argument("feature dim != layer input dim");
  require_finite(x);

  FeatureMatrix aggregated = (1.0 + epsilon) * x;
  for (int u = 0; u < g.num_nodes(); ++u) {
    for (int v : g.neighbors(u)) aggregated.row(u) += x.row(v);
  }
  FeatureMatrix hidden = (aggregated * w1.transpose()).rowwise() + b1.transpose();
  hidden = hidden.cwiseMax(0.0);
  return (hidden * w2.transpose()).rowwise() + b2.transpose();
}

EgpSchedule EgpSchedule::alternating(int num_layers, bool cayley_first) {
  if (num_layers < 0) throw std::invalid_argument("negative layer count");
  EgpSchedule s;
  for (int t = 0; t < num_layers; ++t) {
    const bool input_layer = (t % 2 == 0) != cayley_first;
    s.layers.push_back(input_layer ? LayerGraph::kInput : LayerGraph::kCayley);
  }
  return s;
}

EgpSchedule EgpSchedule::input_only(int num_layers) {
  EgpSchedule s;
  s.layers.assign(num_layers, LayerGraph::kInput);
  return s;
}

EgpSchedule EgpSchedule::cayley_only(int num_layers) {
  EgpSchedule s;
  s.layers.assign(num_layers, LayerGraph::kCayley);
  return s;
}

EgpSchedule EgpSchedule::parse(const std::string& text, int num_layers) {
  if (text == "egp") return alternating(num_layers);
  if (text == "egp-cayley-first") return alternating(num_layers, true);
  if (text == "input") return input_only(num_layers);
  if (text == "cayley") return cayley_only(num_layers);
  EgpSchedule s;
  for (char ch : text) {
    if (ch == 'i') {
      s.layers.push_back(LayerGraph::kInput);
    } else if (ch == 'c') {
      s.layers.push_back(LayerGraph::kCayley);
    } else {
      throw std::invalid_argument("schedule pattern may only contain 'i' and 'c'");
    }
  }
  if (s.size() != num_layers) {
    throw std::invalid_argument("schedule pattern length does not match layer count");
  }
  return s;
}

EgpModel::EgpModel(int num_nodes, int in_dim, EgpSchedule schedule, const EgpOptions& options)
    : schedule_(std::move(schedule)) {
  if (num_nodes < 1) throw std::invalid_argument("model needs at least one node");
  UniformStream stream(options.seed);
  int dim = in_dim;
  for (int t = 0; t < schedule_.size(); ++t) {
    layers_.push_back(
        init_from_stream(dim, options.hidden_dim, options.hidden_dim, stream, options.epsilon));
    dim = options.hidden_dim;
  }
  const CayleyGraph cayley = CayleyGraph::build(select_n(num_nodes));
  cayley_slice_ = slice(cayley, num_nodes).graph();
}

FeatureMatrix EgpModel::forward(const Graph& input_graph, const FeatureMatrix& x) const {
  if (input_graph.num_nodes() != cayley_slice_.num_nodes()) {
    throw std::invalid_argument("input graph size differs from the model's node count");
  }
  require_finite(x);
  FeatureMatrix h = x;
  for (int t = 0; t < schedule_.size(); ++t) {
    const Graph& graph =
        schedule_.layers[t] == LayerGraph::kInput ? input_graph : cayley_slice_;
    h = layers_[t].forward(h, graph);
  }
  return h;
}

FeatureMatrix egp_forward(const FeatureMatrix& x, const Graph& input_graph, int num_layers,
                          const EgpOptions& options, bool cayley_first) {
  if (num_layers < 1) throw std::invalid_argument("need at least one layer");
  const EgpModel model(input_graph.num_nodes(), static_cast<int>(x.cols()),
                       EgpSchedule::alternating(num_layers, cayley_first), options);
  return model.forward(input_graph, x);
}

double sensitivity_probe(const Graph& input_graph, const EgpSchedule& schedule, int source,
                         int target, const FeatureMatrix& base_features,
                         const EgpOptions& options, double step) {
  const int n = input_graph.num_nodes();
  if (source < 0 || source >= n || target < 0 || target >= n) {
    throw std::invalid_argument("probe endpoints out of range");
  }
  const EgpModel model(n, static_cast<int>(base_features.cols()), schedule, options);

  const int in_dim = static_cast<int>(base_features.cols());
  Eigen::MatrixXd jacobian;
  FeatureMatrix perturbed = base_features;
  for (int c = 0; c < in_dim; ++c) {
    perturbed(source, c) = base_features(source, c) + step;
    const Eigen::VectorXd plus = model.forward(input_graph, perturbed).row(target).transpose();
    perturbed(source, c) = base_features(source, c) - step;
    const Eigen::VectorXd minus = model.forward(input_graph, perturbed).row(target).transpose();
    perturbed(source, c) = base_features(source, c);
    if (jacobian.size() == 0) jacobian.resize(plus.size(), in_dim);
    jacobian.col(c) = (plus - minus) / (2.0 * step);
  }
  if (!jacobian.allFinite()) throw std::runtime_error("probe produced non-finite outputs");
  return jacobian.norm();
}

FeatureMatrix degree_one_hot(const Graph& g) {
  const int dim = g.max_degree() + 1;
  FeatureMatrix x = FeatureMatrix::Zero(g.num_nodes(), dim);
  for (int v = 0; v < g.num_nodes(); ++v) x(v, g.degree(v)) = 1.0;
  return x;
}

std::string to_csv_string(const FeatureMatrix& features) {
  std::ostringstream out;
  for (int r = 0; r < features.rows(); ++r) {
    for (int c = 0; c < features.cols(); ++c) {
      if (c > 0) out << ',';
      out << features(r, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace egp
