#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphax/enumerate.hpp"
#include "cli/report_io.hpp"

namespace alphax::cli {

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> first;

  bool passed() const { return violations == 0; }
  void fail(std::string graph6, std::string context);
};

/// 0.1, 0.2, ..., 0.9
std::vector<double> decile_alphas();

/// All isomorphism classes on 1..max_n vertices, generated once per process.
std::vector<Graph> graphs_up_to(int max_n);

/// |alpha_index(K_s v co-K_{n-s}) - join_quotient_index| <= 1e-9 and the
/// f-inequality at the join value, s in 1..max_s, n in s+1..max_n.
SuiteResult closed_form_suite(int max_s, int max_n, const std::vector<double>& alphas, double tol);
/// Both lower bounds against the computed alpha-index on the same grid.
SuiteResult join_bound_suite(int max_s, int max_n, const std::vector<double>& alphas, double tol);
/// |2 rho_{1/2}(G) - lambda_max(D + A)| <= 2e-10 for every graph on <= max_n vertices.
SuiteResult signless_laplacian_suite(int max_n, double tol);
/// Randomized set families (k <= 6, universe <= 20).
SuiteResult intersection_suite(int samples, std::uint64_t seed);
/// Structural conclusions over every minor-free graph on <= max_n vertices
/// and every (A, B) meeting the complete-bipartite hypothesis.
SuiteResult structure_suite(Family family, int max_n);
/// rho_alpha strictly drops (margin > 1e-12) when an edge is deleted from a
/// connected graph; when connected_only, only deletions that stay connected.
SuiteResult monotonicity_suite(int max_n, const std::vector<double>& alphas, bool connected_only, double tol);
/// rho_alpha = alpha d + (1 - alpha) rho_0 on d-regular graphs.
SuiteResult regular_closure_suite(int max_n, double tol);
/// rho_alpha(G) >= rho_alpha(G - v).
SuiteResult vertex_deletion_suite(int max_n, const std::vector<double>& alphas, double tol);
/// Signless-Laplacian extremal graph at alpha = 1/2 over n_min..n_max.
SuiteResult corollary_suite(Family family, int n_min, int n_max, double tol);
/// Completing A to a clique keeps the graph minor-free,
/// on planted random graphs that satisfy the size hypothesis.
SuiteResult clique_completion_suite(Family family, int samples, std::uint64_t seed);

std::vector<DensityRow> density_table(Family family, int max_n);

}  // namespace alphax::cli
