#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egp/cayley.hpp"
#include "egp/graph.hpp"

namespace egp {

/// File access or parse failure, distinct from bad arguments so the CLI can
/// map it to its own exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parsed on-disk graph. `n` and `labels` are only present for JSON files
/// that carry them (Cayley exports).
struct GraphFile {
  Graph graph;
  std::optional<std::int64_t> n;
  std::optional<std::vector<int>> labels;
};

/// Edge list format: one "u v" pair per line, 0-based, undirected, repeated
/// lines are parallel edges, '#' starts a comment. Node count is the largest
/// index + 1.
Graph read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const Graph& g);

/// JSON format: {"num_nodes": N, "edges": [[u,v],...]} with optional "n"
/// (source modulus) and "generator_labels" (per-edge slots).
GraphFile read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const Graph& g,
                      std::optional<std::int64_t> n = std::nullopt,
                      const std::vector<int>* labels = nullptr);

/// Reads by extension: ".json" -> JSON, anything else -> edge list.
GraphFile read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, const std::string& format,
                      std::optional<std::int64_t> n = std::nullopt,
                      const std::vector<int>* labels = nullptr);

}  // namespace egp
