// Command-line front end: Cayley expander construction, spectral and
// curvature reports, walk mixing, and the interleaved propagation model.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 internal-consistency
// failure (a computed bound was violated).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "egp/cayley.hpp"
#include "egp/curvature.hpp"
#include "egp/dynamics.hpp"
#include "egp/generators.hpp"
#include "egp/graph_io.hpp"
#include "egp/propagation.hpp"
#include "egp/spectral.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw egp::IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw egp::IoError("write failed: " + path);
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
  if (out_path) {
    write_text(*out_path, text);
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
}

egp::FeatureMatrix read_features_csv(const std::string& path, int expected_rows) {
  std::ifstream in(path);
  if (!in) throw egp::IoError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw egp::IoError("ragged feature rows in " + path);
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != expected_rows) {
    throw egp::IoError("feature rows (" + std::to_string(rows.size()) +
                       ") do not match node count (" + std::to_string(expected_rows) + ")");
  }
  egp::FeatureMatrix x(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) x(r, c) = rows[r][c];
  }
  return x;
}

struct BuildArgs {
  std::int64_t n = 0;
  std::int64_t nodes = 0;
  std::optional<std::string> out;
  std::string format = "edgelist";
};

int run_build(const BuildArgs& args) {
  if ((args.n > 0) == (args.nodes > 0)) {
    throw CLI::ValidationError("build", "give exactly one of --n and --nodes");
  }

  const std::int64_t n = args.n > 0 ? args.n : egp::select_n(args.nodes);
  const egp::CayleyGraph cayley = egp::CayleyGraph::build(n);

  egp::Graph graph;
  std::vector<int> labels;
  if (args.nodes > 0 && args.nodes < cayley.num_nodes()) {
    graph = egp::slice(cayley, static_cast<int>(args.nodes)).graph();
  } else {
    graph = cayley.undirected();
    labels = cayley.undirected_edge_slots();
  }

  if (args.out) {
    egp::write_graph_file(*args.out, graph, args.format, n,
                          labels.empty() ? nullptr : &labels);
  }
  std::cout << "n " << n << "\nnodes " << graph.num_nodes() << "\nedges " << graph.num_edges()
            << "\ndiameter " << graph.diameter() << "\n";
  return 0;
}

egp::Graph make_generated(const std::string& kind, int size) {
  if (kind == "barbell") return egp::barbell(size);
  if (kind == "path") return egp::path_graph(size);
  if (kind == "cycle") return egp::cycle_graph(size);
  if (kind == "complete") return egp::complete_graph(size);
  if (kind == "tree") return egp::balanced_binary_tree(size);
  throw CLI::ValidationError("gen", "unknown kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley expander graphs: construction, verification, and propagation"};
  app.require_subcommand(1);

  // --- build ---------------------------------------------------------------
  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "construct Cay(SL(2, Z_n); S_n), optionally sliced");
  build->add_option("--n", build_args.n, "modulus n (>= 2); builds the full graph");
  build->add_option("--nodes", build_args.nodes,
                    "target node count; picks the smallest adequate n and slices");
  build->add_option("--out", build_args.out, "output file");
  build->add_option("--format", build_args.format, "edgelist|json")->default_str("edgelist");

  // --- gen -----------------------------------------------------------------
  std::string gen_kind;
  int gen_size = 0;
  std::optional<std::string> gen_out;
  std::string gen_format = "edgelist";
  auto* gen = app.add_subcommand("gen", "synthetic graphs: barbell, path, cycle, complete, tree");
  gen->add_option("--kind", gen_kind)->required();
  gen->add_option("--size", gen_size, "clique size / length / vertex count / tree depth")
      ->required();
  gen->add_option("--out", gen_out, "output file");
  gen->add_option("--format", gen_format, "edgelist|json");

  // --- analyze ---------------------------------------------------------------
  std::string analyze_path;
  std::optional<std::string> analyze_out;
  bool analyze_iterative = false;
  double analyze_tol = 1e-10;
  auto* analyze = app.add_subcommand("analyze", "spectral report (gaps, Cheeger, diameter bound)");
  analyze->add_option("graph", analyze_path, "graph file")->required();
  analyze->add_option("--out", analyze_out, "write JSON here instead of stdout");
  analyze->add_flag("--iterative", analyze_iterative, "force the iterative eigensolver");
  analyze->add_option("--tol", analyze_tol, "iterative eigensolver tolerance");

  // --- curvature -------------------------------------------------------------
  std::string curv_path;
  std::optional<std::string> curv_out;
  double curv_idleness = 0.5;
  std::string curv_format = "json";
  auto* curv = app.add_subcommand("curvature", "balanced Forman and Ollivier curvature per edge");
  curv->add_option("graph", curv_path, "graph file")->required();
  curv->add_option("--idleness", curv_idleness, "Ollivier stay-put mass, in [0, 1)");
  curv->add_option("--out", curv_out, "output file");
  curv->add_option("--format", curv_format, "json|csv");

  // --- mixing ----------------------------------------------------------------
  std::string mixing_path;
  std::optional<std::string> mixing_out, mixing_traj;
  bool mixing_irregular = false;
  int mixing_cap = 0;
  std::vector<int> mixing_starts;
  auto* mixing = app.add_subcommand("mixing", "lazy random walk mixing time");
  mixing->add_option("graph", mixing_path, "graph file")->required();
  mixing->add_option("--out", mixing_out, "write JSON here instead of stdout");
  mixing->add_option("--trajectory", mixing_traj, "write per-step deviations as CSV");
  mixing->add_flag("--allow-irregular", mixing_irregular,
                   "accept non-regular graphs (degree-stationary target)");
  mixing->add_option("--cap", mixing_cap, "iteration cap (default 10 * |V|)");
  mixing->add_option("--start", mixing_starts, "start vertices (default: all)");

  // --- propagate ---------------------------------------------------------------
  std::string prop_path;
  std::optional<std::string> prop_features, prop_out;
  int prop_layers = 4, prop_dims = 16;
  std::uint64_t prop_seed = 0;
  std::string prop_schedule = "egp";
  auto* prop = app.add_subcommand("propagate", "run the interleaved GIN forward pass");
  prop->add_option("graph", prop_path, "input graph file")->required();
  prop->add_option("--features", prop_features, "CSV features (default: degree one-hot)");
  prop->add_option("--layers", prop_layers, "number of layers T");
  prop->add_option("--dims", prop_dims, "hidden width");
  prop->add_option("--seed", prop_seed, "weight seed");
  prop->add_option("--schedule", prop_schedule, "egp|egp-cayley-first|input|cayley|pattern");
  prop->add_option("--out", prop_out, "write embeddings CSV here instead of stdout");

  // --- probe ---------------------------------------------------------------
  std::string probe_path;
  int probe_source = 0, probe_target = 0, probe_layers = 4, probe_dims = 16, probe_num_seeds = 3;
  std::uint64_t probe_seed = 0;
  double probe_step = 1e-4;
  std::string probe_schedule = "egp";
  auto* probe = app.add_subcommand("probe", "influence of one node's input on another's output");
  probe->add_option("graph", probe_path, "input graph file")->required();
  probe->add_option("--source", probe_source)->required();
  probe->add_option("--target", probe_target)->required();
  probe->add_option("--layers", probe_layers, "number of layers T");
  probe->add_option("--dims", probe_dims, "hidden width");
  probe->add_option("--seed", probe_seed, "first weight seed");
  probe->add_option("--seeds", probe_num_seeds, "number of seeds to average");
  probe->add_option("--step", probe_step, "finite-difference step");
  probe->add_option("--schedule", probe_schedule, "egp|input|cayley|pattern");

  try {
    app.parse(argc, argv);

    if (build->parsed()) return run_build(build_args);

    if (gen->parsed()) {
      const egp::Graph g = make_generated(gen_kind, gen_size);
      if (gen_out) {
        egp::write_graph_file(*gen_out, g, gen_format);
      } else {
        std::ostringstream text;
        egp::write_edgelist(text, g);
        std::cout << text.str();
      }
      return 0;
    }

    if (analyze->parsed()) {
      const egp::Graph g = egp::read_graph_file(analyze_path).graph;
      const auto mode = (analyze_iterative || g.num_nodes() > 3000) ? egp::EigenMode::kIterative
                                                                    : egp::EigenMode::kExact;
      const egp::SpectralReport report = egp::spectral_report(g, mode, analyze_tol);
      emit(analyze_out, egp::to_json_string(report));
      return 0;
    }

    if (curv->parsed()) {
      const egp::Graph g = egp::read_graph_file(curv_path).graph;
      const egp::CurvatureReport report = egp::curvature_report(g, curv_idleness);
      emit(curv_out, curv_format == "csv" ? egp::to_csv_string(report)
                                          : egp::to_json_string(report));
      return 0;
    }

    if (mixing->parsed()) {
      const egp::Graph g = egp::read_graph_file(mixing_path).graph;
      egp::MixingOptions options;
      options.allow_irregular = mixing_irregular;
      options.cap_steps = mixing_cap;
      const egp::MixingResult result = egp::mixing_time(g, mixing_starts, options);
      if (mixing_traj) write_text(*mixing_traj, egp::trajectory_csv(result));
      emit(mixing_out, egp::to_json_string(result));
      return 0;
    }

    if (prop->parsed()) {
      const egp::Graph g = egp::read_graph_file(prop_path).graph;
      const egp::FeatureMatrix x = prop_features
                                       ? read_features_csv(*prop_features, g.num_nodes())
                                       : egp::degree_one_hot(g);
      egp::EgpOptions options;
      options.hidden_dim = prop_dims;
      options.seed = prop_seed;
      const egp::EgpModel model(g.num_nodes(), static_cast<int>(x.cols()),
                                egp::EgpSchedule::parse(prop_schedule, prop_layers), options);
      emit(prop_out, egp::to_csv_string(model.forward(g, x)));
      return 0;
    }

    if (probe->parsed()) {
      const egp::Graph g = egp::read_graph_file(probe_path).graph;
      const egp::FeatureMatrix x = egp::degree_one_hot(g);
      const egp::EgpSchedule schedule = egp::EgpSchedule::parse(probe_schedule, probe_layers);
      double total = 0.0;
      for (int i = 0; i < probe_num_seeds; ++i) {
        egp::EgpOptions options;
        options.hidden_dim = probe_dims;
        options.seed = probe_seed + static_cast<std::uint64_t>(i);
        total +=
            egp::sensitivity_probe(g, schedule, probe_source, probe_target, x, options, probe_step);
      }
      std::cout << "influence " << total / probe_num_seeds << "\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;  // all usage errors map to 1
  } catch (const egp::InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const egp::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
