#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "alphax/enumerate.hpp"
#include "cli/report_io.hpp"

namespace alphax::cli {

enum ExitStatus : int { kExitOk = 0, kExitCounterexample = 1, kExitUsage = 2 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TheoremConfig {
  Family family = Family::fs(1);
  std::vector<int> orders;
  std::vector<double> alphas{0.1, 0.3, 0.5, 0.7, 0.9};
  double tol = kDefaultTol;
  double tie_tol = kTieTol;
  std::optional<int> require_from;
  int shards = 1;                   // split each order into this many shards and merge
  std::optional<Shard> only_shard;  // emit one partial shard instead
  std::vector<Graph> input;         // when non-empty, streams come from these graphs
  int threads = 1;
  bool timing = false;
};

struct VerdictSummary {
  std::vector<SearchReport> reports;  // ordered by (n, alpha)
  std::optional<Counterexample> first_counterexample;
  std::optional<int> empirical_n0;  // smallest n from which every later point matches uniquely
  int exit_status = kExitOk;
};

VerdictSummary verify_theorem(const TheoremConfig& config);
std::string theorem_json(const TheoremConfig& config, const VerdictSummary& summary);
std::string theorem_csv(const VerdictSummary& summary);

/// Worker count from ALPHAX_THREADS, defaulting to the hardware concurrency.
int worker_count();

/// "4", "4..8" or "5,7,9".
std::vector<int> parse_orders(const std::string& text);
std::vector<double> parse_reals(const std::string& text);

}  // namespace alphax::cli
