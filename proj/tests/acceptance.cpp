// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alphax/enumerate.hpp"
#include "alphax/graph6.hpp"
#include "alphax/minor.hpp"
#include "alphax/spectral.hpp"
#include "cli/commands.hpp"

using namespace alphax;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<Graph> all_graphs(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto s = enumerate_graphs(n, connected_only);
    out.insert(out.end(), s.graphs.begin(), s.graphs.end());
  }
  return out;
}

std::vector<double> deciles() {
  std::vector<double> a;
  for (int k = 1; k <= 9; ++k) a.push_back(k / 10.0);
  return a;
}

Outcome closed_form() {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  int checks = 0;
  for (int s = 1; s <= 3; ++s)
    for (int n = s + 1; n <= 30; ++n)
      for (double a : deciles()) {
        const double err = std::fabs(alpha_index(extremal_fs(n, s), a).rho - join_quotient_index(n, s, a));
        worst = std::max(worst, err);
        ++checks;
      }
  return {worst <= kTol, std::to_string(checks) + " points, max |error| " + fmt(worst) + " (tol 1e-9)"};
}

Outcome join_bounds() {
  int checks = 0, strong = 0, violations = 0;
  std::string first;
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 1; n <= 30; ++n)
      for (double a : deciles()) {
        const double rho = alpha_index(extremal_fs(n, k), a).rho;
        const JoinLowerBounds lb = nikiforov_lower_bound(n, k, a);
        ++checks;
        bool bad = rho < lb.basic - kTieTol;
        if (lb.strong) {
          ++strong;
          bad = bad || rho < *lb.strong - kTieTol;
        }
        if (bad && violations++ == 0) first = " first at n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
  return {violations == 0, std::to_string(checks) + " points (" + std::to_string(strong) + " with the strong bound), " +
                               std::to_string(violations) + " violations" + first};
}

Outcome signless_identity() {
  constexpr double kTol = 2e-10;
  double worst = 0.0;
  const auto graphs = all_graphs(7, false);
  for (const Graph& g : graphs) {
    const double q = largest_eigenvalue(signless_laplacian_matrix(g));
    worst = std::max(worst, std::fabs(2.0 * alpha_index(g, 0.5).rho - q));
  }
  return {worst <= kTol, std::to_string(graphs.size()) + " graphs, max |2 rho_1/2 - q| " + fmt(worst) + " (tol 2e-10)"};
}

Outcome oracle_equivalence() {
  const std::vector<std::pair<std::string, Graph>> patterns{{"K3", make_complete(3)}, {"K4", make_complete(4)},
                                                            {"C4", make_cycle(4)},    {"F1", friendship(1)},
                                                            {"F2", friendship(2)},    {"Q1", quadrangle_book(1)}};
  int checks = 0, disagreements = 0, bad_certificates = 0;
  std::string first;
  for (const Graph& g : all_graphs(6, false))
    for (const auto& [name, h] : patterns) {
      ++checks;
      const MinorVerdict v = has_minor(g, h);
      if (v.model && !validate_model(g, h, *v.model)) ++bad_certificates;
      if (v.contains != minor_closure_oracle(g, h) && disagreements++ == 0) first = " first " + write_graph6(g) + "/" + name;
    }
  return {disagreements == 0 && bad_certificates == 0,
          std::to_string(checks) + " pairs, " + std::to_string(disagreements) + " disagreements, " +
              std::to_string(bad_certificates) + " invalid certificates" + first};
}

Outcome construction_minor_free() {
  int checks = 0, failures = 0;
  std::string first;
  for (int p = 1; p <= 3; ++p)
    for (int n = p + 1; n <= 12; ++n) {
      checks += 2;
      if (!is_fs_minor_free(extremal_fs(n, p), p) && failures++ == 0)
        first = " first fs n=" + std::to_string(n) + " s=" + std::to_string(p);
      if (!is_qt_minor_free(extremal_qt(n, p), p) && failures++ == 0)
        first = " first qt n=" + std::to_string(n) + " t=" + std::to_string(p);
    }
  return {failures == 0, std::to_string(checks) + " constructions, " + std::to_string(failures) + " contain the minor" + first};
}

cli::TheoremConfig theorem_config(Family family, int n_min) {
  cli::TheoremConfig c;
  c.family = family;
  for (int n = n_min; n <= 8; ++n) c.orders.push_back(n);
  c.alphas = {0.25, 0.5, 0.75};
  c.tie_tol = 1e-9;
  c.threads = cli::worker_count();
  return c;
}

Outcome theorem_desk_scale(Family family, int n_min) {
  const cli::VerdictSummary s = cli::verify_theorem(theorem_config(family, n_min));
  int failures = 0;
  std::ostringstream detail;
  for (const SearchReport& r : s.reports)
    if (!(r.matches_construction && r.unique)) {
      if (failures++ == 0)
        detail << " counterexample " << r.argmax_graph6 << " at n=" << r.n << " alpha=" << r.alpha
               << " ties=" << r.ties.size();
    }
  std::ostringstream head;
  head << s.reports.size() << " (n, alpha) points, construction is the unique argmax at "
       << s.reports.size() - failures << detail.str();
  return {failures == 0, head.str()};
}

Outcome monotonicity() {
  constexpr double kMargin = 1e-12;
  int checks = 0, violations = 0;
  double tightest = 1e300;
  std::string first;
  for (const Graph& g : all_graphs(6, true))
    for (double a : {0.3, 0.5, 0.7}) {
      const double rho = alpha_index(g, a).rho;
      for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.remove_edge(u, v);
        if (!is_connected(h)) continue;
        ++checks;
        const double drop = rho - alpha_index(h, a).rho;
        tightest = std::min(tightest, drop);
        if (!(drop > kMargin) && violations++ == 0) first = " first " + write_graph6(g);
      }
    }
  return {violations == 0, std::to_string(checks) + " deletions, smallest drop " + fmt(tightest) + " (margin 1e-12), " +
                               std::to_string(violations) + " violations" + first};
}

Outcome structure() {
  int checks = 0, violations = 0;
  std::string first;
  for (const Graph& g : all_graphs(7, false)) {
    const bool forest = is_fs_minor_free(g, 1);
    const bool c4_free = is_qt_minor_free(g, 1);
    if (!forest && !c4_free) continue;
    for (int a = 0; a < g.order(); ++a) {
      const std::uint64_t nb = g.row(a);
      // every B inside N(a) of the required size
      for (std::uint64_t b = nb; b != 0; b = (b - 1) & nb) {
        const VertexSet bset(b);
        if (forest && bset.size() >= 2) {
          ++checks;
          const StructureReport r = check_fs_structure(g, 1, VertexSet{a}, bset);
          if (!r.ok() && violations++ == 0) first = " first " + write_graph6(g) + " " + r.violations[0].describe();
        }
        if (c4_free && bset.size() >= 3) {
          ++checks;
          const StructureReport r = check_qt_structure(g, 1, VertexSet{a}, bset);
          if (!r.ok() && violations++ == 0) first = " first " + write_graph6(g) + " " + r.violations[0].describe();
        }
      }
    }
  }
  return {violations == 0, std::to_string(checks) + " (G, A, B) configurations, " + std::to_string(violations) +
                               " violations" + first};
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return std::to_string(status) + "\n" + out.str() + err.str();
}

Outcome determinism() {
  int compared = 0;
  std::vector<std::string> mismatches;
  for (const char* family : {"fs", "qt"}) {
    const std::string param = std::string(family) == "fs" ? "--s" : "--t";
    const std::string orders = std::string(family) == "fs" ? "4..8" : "5..8";
    for (const char* format : {"--csv", "--json"}) {
      const std::vector<std::string> base{"verify-theorem", "--family", family, param,  "1",
                                          "--n",            orders,     "--alpha", "0.25,0.5,0.75", format, "-"};
      const std::string first = run_cli(base);
      const std::string again = run_cli(base);
      auto sharded = base;
      sharded.insert(sharded.end(), {"--shards", "3"});
      const std::string split = run_cli(sharded);
      compared += 2;
      const std::string label = std::string(family) + " " + format;
      if (again != first) mismatches.push_back(label + " repeat");
      if (split != first) mismatches.push_back(label + " sharded");
    }
  }
  std::string detail = std::to_string(compared) + " report comparisons (repeat and 3 shards), " +
                       std::to_string(mismatches.size()) + " differ";
  for (const auto& m : mismatches) detail += " [" + m + "]";
  return {mismatches.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form agreement", closed_form},
      {"join lower bounds", join_bounds},
      {"signless Laplacian identity", signless_identity},
      {"minor oracle equivalence", oracle_equivalence},
      {"construction minor-freeness", construction_minor_free},
      {"fs(1) star is the unique extremal graph", [] { return theorem_desk_scale(Family::fs(1), 4); }},
      {"qt(1) K1 v M(n-1) is the unique extremal graph", [] { return theorem_desk_scale(Family::qt(1), 5); }},
      {"subgraph monotonicity", monotonicity},
      {"structural lemmas", structure},
      {"determinism and shard merge", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": " << criteria[i].first << ": "
              << o.detail << " (" << fmt(secs) << " s)" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
