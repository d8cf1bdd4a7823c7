#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "alphax/canonical.hpp"
#include "alphax/graph6.hpp"
#include "cli/commands.hpp"
#include "json.hpp"

using namespace alphax;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("construct") {
  Outcome o = run_cli({"construct", "--family", "fs-extremal", "--n", "6", "--s", "1"});
  CHECK(o.status == cli::kExitOk);
  CHECK(isomorphic(parse_graph6(lines(o.out).at(0)), make_complete_bipartite(1, 5)));
  o = run_cli({"construct", "--family", "friendship", "--s", "2"});
  CHECK(parse_graph6(lines(o.out).at(0)) == friendship(2));
  o = run_cli({"construct", "--family", "qt-extremal", "--n", "7", "--t", "1"});
  CHECK(isomorphic(parse_graph6(lines(o.out).at(0)), friendship(3)));
  o = run_cli({"construct", "--family", "join", "--operand", "@", "--operand", "A?"});
  CHECK(isomorphic(parse_graph6(lines(o.out).at(0)), make_complete_bipartite(1, 2)));
  o = run_cli({"construct", "--family", "complement", "--operand", "C~"});
  CHECK(parse_graph6(lines(o.out).at(0)) == make_empty(4));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli({}).status == cli::kExitUsage);
  CHECK(run_cli({"construct", "--family", "friendship"}).status == cli::kExitUsage);
  CHECK(run_cli({"construct", "--family", "friendship", "--s", "0"}).status == cli::kExitUsage);
  CHECK(run_cli({"construct", "--family", "nonsense", "--n", "3"}).status == cli::kExitUsage);
  CHECK(run_cli({"bogus"}).status == cli::kExitUsage);
  CHECK(run_cli({"alpha-index", "--graph", "D?"}).status == cli::kExitUsage);
  CHECK(run_cli({"verify-theorem", "--family", "fs", "--s", "1", "--n", "5", "--alpha", "1"}).status ==
        cli::kExitUsage);
  CHECK(run_cli({"verify-theorem", "--family", "fs", "--s", "1", "--n", "10"}).status == cli::kExitUsage);
  CHECK(run_cli({"minor-check", "--graph", "D~{", "--minor", "X3"}).status == cli::kExitUsage);
  const Outcome capped = run_cli({"minor-check", "--graph", write_graph6(extremal_qt(10, 2)), "--minor", "Q2",
                                  "--node-cap", "3"});
  CHECK(capped.status == cli::kExitUsage);
  CHECK(capped.err.find("cap") != std::string::npos);
  CHECK(run_cli({"--help"}).status == cli::kExitOk);
}

TEST_CASE("alpha-index rows") {
  Outcome o = run_cli({"alpha-index", "--family", "complete", "--n", "4", "--alpha", "0.5"});
  CHECK(o.status == 0);
  auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "graph6,n,alpha,rho,residual");
  CHECK(fields(rows[1])[3] == "3");
  o = run_cli({"alpha-index", "--family", "complete", "--n", "4", "--signless-laplacian"});
  rows = lines(o.out);
  CHECK(rows[0] == "graph6,n,q,residual");
  CHECK(fields(rows[1])[2] == "6");
  o = run_cli({"alpha-index", "--graph", write_graph6(make_complete_bipartite(1, 3)), "--graph", "B?", "--alpha",
               "0.5,0.25"});
  rows = lines(o.out);
  REQUIRE(rows.size() == 5);
  CHECK(fields(rows[1])[3] == "2");
  CHECK(fields(rows[3])[3] == "0");
  CHECK(fields(rows[4])[3] == "0");
}

TEST_CASE("minor-check rows and certificates") {
  Outcome o = run_cli({"minor-check", "--family", "fs-extremal", "--n", "9", "--s", "2", "--minor", "F2"});
  CHECK(o.status == 0);
  auto rows = lines(o.out);
  CHECK(rows[0] == "graph6,n,minor,contains,nodes_explored,certificate_valid");
  CHECK(fields(rows[1])[3] == "false");

  o = run_cli({"minor-check", "--family", "complete", "--n", "5", "--minor", "K3", "--oracle", "--json"});
  CHECK(o.status == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["results"][0]["contains"] == true);
  CHECK(doc["results"][0]["certificate_valid"] == true);
  CHECK(doc["results"][0]["oracle"] == true);
  CHECK(doc["results"][0]["certificate"]["branch_sets"].size() == 3);

  o = run_cli({"minor-check", "--family", "cycle", "--n", "4", "--minor", "C4", "--oracle"});
  rows = lines(o.out);
  CHECK(rows[0].ends_with(",oracle"));
  CHECK(fields(rows[1])[3] == "true");
  CHECK(fields(rows[1])[6] == "true");
}

TEST_CASE("verify-theorem reports") {
  Outcome o = run_cli({"verify-theorem", "--family", "fs", "--s", "1", "--n", "3..5", "--alpha", "0.5"});
  CHECK(o.status == 0);
  auto rows = lines(o.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "graph6,n,alpha,family,rho,residual,minor_free,matches_construction,unique,ties");
  // n = 3: the path P_3 is the star K_{1,2}
  CHECK(isomorphic(parse_graph6(fields(rows[1])[0]), make_path(3)));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(fields(rows[i])[7] == "true");
    CHECK(fields(rows[i])[8] == "true");
  }

  o = run_cli({"verify-theorem", "--family", "qt", "--t", "1", "--n", "5,7,9", "--alpha", "0.5", "--json", "-"});
  CHECK(o.status == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["schema"] == 1);
  REQUIRE(doc["reports"].size() == 3);
  for (const auto& r : doc["reports"]) {
    CHECK(r["matches_construction"] == true);
    CHECK(r["unique"] == true);
    CHECK_FALSE(r.contains("wall_time_ms"));
  }
  CHECK(doc["empirical_n0"] == 5);
  CHECK(doc["first_counterexample"].is_null());
}

TEST_CASE("verify-theorem flags small-order mismatches only when required") {
  // Without the star in the input the argmax cannot be the construction.
  const std::string path = (std::filesystem::temp_directory_path() / "alphax_cli_input.g6").string();
  {
    std::ofstream f(path);
    f << write_graph6(make_path(4)) << '\n' << write_graph6(make_empty(4)) << '\n';
  }
  Outcome o = run_cli({"verify-theorem", "--family", "fs", "--s", "1", "--input", path, "--alpha", "0.5"});
  CHECK(o.status == cli::kExitOk);
  CHECK(fields(lines(o.out).at(1))[7] == "false");
  o = run_cli({"verify-theorem", "--family", "fs", "--s", "1", "--input", path, "--alpha", "0.5", "--require-from",
               "4", "--json", "-"});
  CHECK(o.status == cli::kExitCounterexample);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(isomorphic(parse_graph6(doc["first_counterexample"]["graph6"].get<std::string>()), make_path(4)));
  o = run_cli({"verify-theorem", "--family", "fs", "--s", "1", "--input", path, "--alpha", "0.5", "--require-from",
               "5"});
  CHECK(o.status == cli::kExitOk);
  std::remove(path.c_str());
}

TEST_CASE("sharded theorem runs are byte-identical") {
  const std::vector<std::string> base{"verify-theorem", "--family", "qt", "--t", "1", "--n", "5..7", "--alpha",
                                      "0.3,0.6", "--json", "-"};
  const Outcome once = run_cli(base);
  const Outcome twice = run_cli(base);
  auto sharded_args = base;
  sharded_args.insert(sharded_args.end(), {"--shards", "3"});
  const Outcome sharded = run_cli(sharded_args);
  CHECK(once.out == twice.out);
  CHECK(once.out == sharded.out);
  const Outcome partial = run_cli({"verify-theorem", "--family", "qt", "--t", "1", "--n", "6", "--alpha", "0.5",
                                   "--shard", "1/3", "--json", "-"});
  CHECK(partial.status == 0);
  CHECK(nlohmann::json::parse(partial.out)["shard"] == "1/3");
}

TEST_CASE("verify-lemmas") {
  const std::string path = (std::filesystem::temp_directory_path() / "alphax_lemmas.json").string();
  const Outcome o = run_cli({"verify-lemmas", "--max-n", "6", "--grid-max-n", "12", "--samples", "500", "--json",
                             path});
  CHECK(o.status == 0);
  const auto rows = lines(o.out);
  CHECK(rows[0] == "suite,checked,violations,first_counterexample");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(fields(rows[i])[2] == "0");
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["schema"] == 1);
  CHECK(doc["edge_density"]["fs(1)"][5]["max_edges"] == 5);
  std::remove(path.c_str());
}

TEST_CASE("order and real lists") {
  CHECK(cli::parse_orders("4") == std::vector<int>{4});
  CHECK(cli::parse_orders("4..7") == std::vector<int>{4, 5, 6, 7});
  CHECK(cli::parse_orders("5,7,9") == std::vector<int>{5, 7, 9});
  CHECK_THROWS(cli::parse_orders("7..4"));
  CHECK(cli::parse_reals("0.25, 0.5") == std::vector<double>{0.25, 0.5});
  CHECK_THROWS(cli::parse_reals("0.5x"));
}
