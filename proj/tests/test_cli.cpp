#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "egp/graph_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(EGP_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer;
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) result.output += buffer.data();
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/egp_cli_test_") + name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build by modulus reports the figure facts") {
  const RunResult r = run_cli("build --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n 3") != std::string::npos);
  CHECK(r.output.find("nodes 24") != std::string::npos);
  CHECK(r.output.find("edges 48") != std::string::npos);
  CHECK(r.output.find("diameter 4") != std::string::npos);
}

TEST_CASE("build by node target slices a connected subgraph") {
  const std::string path = temp_path("slice100.edges");
  const RunResult r = run_cli("build --nodes 100 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n 5") != std::string::npos);
  const egp::GraphFile file = egp::read_graph_file(path);
  CHECK(file.graph.num_nodes() == 100);
  CHECK(file.graph.is_connected());
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli("build --n 1").exit_code == 1);
  CHECK(run_cli("build").exit_code == 1);
  CHECK(run_cli("build --n 3 --nodes 7").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
}

TEST_CASE("missing input files exit with 2") {
  CHECK(run_cli("analyze /tmp/egp_no_such_file.edges").exit_code == 2);
}

TEST_CASE("json export round-trips with labels") {
  const std::string path = temp_path("cayley.json");
  CHECK(run_cli("build --n 3 --out " + path + " --format json").exit_code == 0);
  const egp::GraphFile file = egp::read_graph_file(path);
  CHECK(file.graph.num_nodes() == 24);
  CHECK(file.n == 3);
  REQUIRE(file.labels.has_value());
  CHECK(file.labels->size() == 48);
  std::remove(path.c_str());
}

TEST_CASE("analyze emits the spectral report") {
  const std::string graph_path = temp_path("p6.edges");
  CHECK(run_cli("gen --kind path --size 6 --out " + graph_path).exit_code == 0);
  const RunResult r = run_cli("analyze " + graph_path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"cheeger_exact\": 0.333") != std::string::npos);
  CHECK(r.output.find("\"diameter\": 5") != std::string::npos);
  std::remove(graph_path.c_str());
}

TEST_CASE("curvature csv on the doubled cycle is all zeros") {
  const std::string graph_path = temp_path("g2.edges");
  CHECK(run_cli("build --n 2 --out " + graph_path).exit_code == 0);
  const RunResult r = run_cli("curvature " + graph_path + " --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    CHECK(line.substr(line.size() - 4) == ",0,0");
    ++rows;
  }
  CHECK(rows == 12);
  std::remove(graph_path.c_str());
}

TEST_CASE("mixing compares the overlay favorably to the bottleneck motif") {
  const std::string cayley_path = temp_path("g3.edges");
  const std::string barbell_path = temp_path("bb12.edges");
  CHECK(run_cli("build --n 3 --out " + cayley_path).exit_code == 0);
  CHECK(run_cli("gen --kind barbell --size 12 --out " + barbell_path).exit_code == 0);

  auto mixing_of = [&](const std::string& args) {
    const RunResult r = run_cli("mixing " + args);
    CHECK(r.exit_code == 0);
    const auto pos = r.output.find("\"mixing_time\": ");
    REQUIRE(pos != std::string::npos);
    return std::atoi(r.output.c_str() + pos + 15);
  };
  const int cayley = mixing_of(cayley_path);
  const int barbell = mixing_of(barbell_path + " --allow-irregular --cap 50000");
  CHECK(barbell > cayley);  // equal node count, strict separation
  CHECK(run_cli("mixing " + barbell_path).exit_code == 1);  // strict mode rejects

  std::remove(cayley_path.c_str());
  std::remove(barbell_path.c_str());
}

TEST_CASE("propagate writes embeddings of the requested shape") {
  const std::string graph_path = temp_path("p10.edges");
  const std::string out_path = temp_path("h.csv");
  CHECK(run_cli("gen --kind path --size 10 --out " + graph_path).exit_code == 0);
  const RunResult r =
      run_cli("propagate " + graph_path + " --layers 4 --dims 8 --seed 1 --out " + out_path);
  CHECK(r.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  int rows = 0, cols = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const long commas = std::count(line.begin(), line.end(), ',');
    if (cols < 0) cols = static_cast<int>(commas) + 1;
    CHECK(static_cast<int>(commas) + 1 == cols);
    CHECK(line.find("nan") == std::string::npos);
    ++rows;
  }
  CHECK(rows == 10);
  CHECK(cols == 8);
  std::remove(graph_path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("probe reports larger influence for the overlay schedule") {
  const std::string graph_path = temp_path("bb10.edges");
  CHECK(run_cli("gen --kind barbell --size 5 --out " + graph_path).exit_code == 0);
  auto influence_of = [&](const std::string& schedule) {
    const RunResult r = run_cli("probe " + graph_path + " --source 0 --target 9 --layers 2 " +
                                "--schedule " + schedule);
    CHECK(r.exit_code == 0);
    const auto pos = r.output.find("influence ");
    REQUIRE(pos != std::string::npos);
    return std::atof(r.output.c_str() + pos + 10);
  };
  // Two input-graph layers cannot span the 3-hop separation; the overlay can.
  CHECK(influence_of("input") == 0.0);
  CHECK(influence_of("ic") > 0.0);
  std::remove(graph_path.c_str());
}

TEST_CASE("deterministic outputs across repeat runs") {
  const std::string graph_path = temp_path("tree.edges");
  CHECK(run_cli("gen --kind tree --size 3 --out " + graph_path).exit_code == 0);
  const RunResult a = run_cli("propagate " + graph_path + " --layers 3 --seed 9");
  const RunResult b = run_cli("propagate " + graph_path + " --layers 3 --seed 9");
  CHECK(a.output == b.output);
  std::remove(graph_path.c_str());
}

}  // TEST_SUITE
