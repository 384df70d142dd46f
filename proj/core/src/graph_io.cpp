#include "egp/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace egp {

Graph read_edgelist(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_index = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) {
      throw IoError("edge list line " + std::to_string(lineno) + ": expected two indices");
    }
    if (u < 0 || v < 0) {
      throw IoError("edge list line " + std::to_string(lineno) + ": negative index");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
  }
  return Graph(max_index + 1, std::move(edges));
}

void write_edgelist(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

GraphFile read_graph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    GraphFile file;
    const int num_nodes = j.at("num_nodes").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    file.graph = Graph(num_nodes, std::move(edges));
    if (j.contains("n")) file.n = j["n"].get<std::int64_t>();
    if (j.contains("generator_labels")) {
      file.labels = j["generator_labels"].get<std::vector<int>>();
      if (file.labels->size() != file.graph.edges().size()) {
        throw IoError("generator_labels length does not match edges");
      }
    }
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad graph JSON: ") + e.what());
  }
}

void write_graph_json(std::ostream& out, const Graph& g, std::optional<std::int64_t> n,
                      const std::vector<int>* labels) {
  nlohmann::json j;
  j["num_nodes"] = g.num_nodes();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (n) j["n"] = *n;
  if (labels != nullptr) j["generator_labels"] = *labels;
  out << j.dump(2) << '\n';
}

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  if (has_suffix(path, ".json")) return read_graph_json(in);
  return GraphFile{read_edgelist(in), std::nullopt, std::nullopt};
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& format,
                      std::optional<std::int64_t> n, const std::vector<int>* labels) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (format == "json") {
    write_graph_json(out, g, n, labels);
  } else if (format == "edgelist") {
    write_edgelist(out, g);
  } else {
    throw std::invalid_argument("unknown graph format: " + format);
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace egp
