#include "cli/lemma_suites.hpp"

#include <cmath>
#include <mutex>
#include <random>

#include "alphax/graph6.hpp"
#include "alphax/spectral.hpp"

namespace alphax::cli {
namespace {

constexpr double kClosedFormTol = 1e-9;
constexpr double kSignlessTol = 2e-10;
constexpr double kStrictMargin = 1e-12;

std::string ctx(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out;
  for (const auto& [k, v] : fields) out += (out.empty() ? "" : " ") + std::string(k) + "=" + v;
  return out;
}

// Subsets of `pool` of a given size, in increasing bit order.
template <typename Visit>
void for_each_subset_of_size(VertexSet pool, int size, Visit&& visit) {
  const auto members = pool.members();
  const int m = static_cast<int>(members.size());
  if (size > m) return;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    VertexSet s;
    for (int i : pick) s.insert(members[i]);
    visit(s);
    int i = size - 1;
    while (i >= 0 && pick[i] == m - size + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

void SuiteResult::fail(std::string graph6, std::string context) {
  ++violations;
  if (!first) first = Counterexample{std::move(graph6), std::move(context)};
}

std::vector<double> decile_alphas() {
  std::vector<double> out;
  for (int i = 1; i <= 9; ++i) out.push_back(i / 10.0);
  return out;
}

std::vector<Graph> graphs_up_to(int max_n) {
  static std::mutex mu;
  static std::vector<std::vector<Graph>> by_order;
  static std::vector<Graph> flat;
  static int cached = 0;
  std::lock_guard lock(mu);
  if (max_n != cached) {
    flat.clear();
    for (int n = 1; n <= max_n; ++n) {
      if (n > static_cast<int>(by_order.size())) by_order.push_back(enumerate_graphs(n, false).graphs);
      flat.insert(flat.end(), by_order[n - 1].begin(), by_order[n - 1].end());
    }
    cached = max_n;
  }
  return flat;
}

SuiteResult closed_form_suite(int max_s, int max_n, const std::vector<double>& alphas, double tol) {
  SuiteResult r;
  r.name = "closed-form";
  for (int s = 1; s <= max_s; ++s) {
    for (int n = s + 1; n <= max_n; ++n) {
      const Graph g = extremal_fs(n, s);
      for (double a : alphas) {
        ++r.checked;
        const double rho = alpha_index(g, a, tol).rho;
        const double root = join_quotient_index(n, s, a);
        if (std::abs(rho - root) > kClosedFormTol) {
          r.fail(write_graph6(g), ctx({{"n", std::to_string(n)}, {"s", std::to_string(s)}, {"alpha", format_real(a)},
                                       {"rho", format_real(rho)}, {"root", format_real(root)}}));
        } else if (a > 0.0 && a < 1.0 && !f_inequality(root, n, s, a)) {
          r.fail(write_graph6(g), ctx({{"n", std::to_string(n)}, {"s", std::to_string(s)}, {"alpha", format_real(a)},
                                       {"f_inequality", "false"}}));
        }
      }
    }
  }
  return r;
}

SuiteResult join_bound_suite(int max_s, int max_n, const std::vector<double>& alphas, double tol) {
  SuiteResult r;
  r.name = "join-lower-bounds";
  for (int k = 1; k <= max_s; ++k) {
    for (int n = k + 1; n <= max_n; ++n) {
      const Graph g = extremal_fs(n, k);
      for (double a : alphas) {
        const double rho = alpha_index(g, a, tol).rho;
        const JoinLowerBounds b = nikiforov_lower_bound(n, k, a);
        ++r.checked;
        if (rho < b.basic - kTieTol) {
          r.fail(write_graph6(g), ctx({{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"alpha", format_real(a)},
                                       {"rho", format_real(rho)}, {"basic", format_real(b.basic)}}));
        }
        if (b.strong) {
          ++r.checked;
          if (rho < *b.strong - kTieTol) {
            r.fail(write_graph6(g), ctx({{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"alpha", format_real(a)},
                                         {"rho", format_real(rho)}, {"strong", format_real(*b.strong)}}));
          }
        }
      }
    }
  }
  return r;
}

SuiteResult signless_laplacian_suite(int max_n, double tol) {
  SuiteResult r;
  r.name = "signless-laplacian";
  for (const Graph& g : graphs_up_to(max_n)) {
    ++r.checked;
    const double q = signless_laplacian_index(g, tol);
    const double direct = largest_eigenvalue(signless_laplacian_matrix(g));
    if (std::abs(q - direct) > kSignlessTol) {
      r.fail(write_graph6(g), ctx({{"two_rho_half", format_real(q)}, {"lambda_max_Q", format_real(direct)}}));
    }
  }
  return r;
}

SuiteResult intersection_suite(int samples, std::uint64_t seed) {
  SuiteResult r;
  r.name = "intersection";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    const int universe = std::uniform_int_distribution<int>(1, 20)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::vector<VertexSet> sets(static_cast<std::size_t>(k));
    for (auto& s : sets)
      for (int v = 0; v < universe; ++v)
        if (std::bernoulli_distribution(density)(rng)) s.insert(v);
    ++r.checked;
    const auto [lhs, rhs] = intersection_lower_bound(sets);
    if (lhs < rhs) {
      std::string desc;
      for (auto s : sets) desc += std::to_string(s.bits()) + ";";
      r.fail("", ctx({{"sets", desc}, {"lhs", std::to_string(lhs)}, {"rhs", std::to_string(rhs)}}));
    }
  }
  return r;
}

SuiteResult structure_suite(Family family, int max_n) {
  const bool fs = family.kind == Family::Kind::Fs;
  SuiteResult r;
  r.name = fs ? "structure-fs" : "structure-qt";
  const int p = family.parameter;
  const int min_b = fs ? 2 * p : 2 * p + 1;
  const Graph forbidden = family.forbidden();
  for (const Graph& g : graphs_up_to(max_n)) {
    if (g.order() < p + min_b) continue;
    if (has_minor(g, forbidden).contains) continue;
    const VertexSet all = VertexSet::range(g.order());
    for_each_subset_of_size(all, p, [&](VertexSet a) {
      VertexSet common = all.minus(a);
      for (int v : a.members()) common = common & g.neighbors(v);
      for (int size = min_b; size <= common.size(); ++size) {
        for_each_subset_of_size(common, size, [&](VertexSet b) {
          ++r.checked;
          const StructureReport rep = fs ? check_fs_structure(g, p, a, b) : check_qt_structure(g, p, a, b);
          if (!rep.ok()) {
            r.fail(write_graph6(g), ctx({{"A", std::to_string(a.bits())}, {"B", std::to_string(b.bits())},
                                         {"witness", rep.violations.front().describe()}}));
          }
        });
      }
    });
  }
  return r;
}

SuiteResult monotonicity_suite(int max_n, const std::vector<double>& alphas, bool connected_only, double tol) {
  SuiteResult r;
  r.name = "subgraph-monotonicity";
  for (const Graph& g : graphs_up_to(max_n)) {
    if (g.order() < 2 || !is_connected(g)) continue;
    std::vector<double> full;
    for (double a : alphas) full.push_back(alpha_index(g, a, tol).rho);
    for (auto [u, v] : g.edges()) {
      Graph h = g;
      h.remove_edge(u, v);
      if (connected_only && !is_connected(h)) continue;
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        ++r.checked;
        const double sub = alpha_index(h, alphas[i], tol).rho;
        if (!(full[i] - sub > kStrictMargin)) {
          r.fail(write_graph6(g), ctx({{"edge", std::to_string(u) + "-" + std::to_string(v)},
                                       {"alpha", format_real(alphas[i])}, {"rho", format_real(full[i])},
                                       {"rho_sub", format_real(sub)}}));
        }
      }
    }
  }
  return r;
}

SuiteResult regular_closure_suite(int max_n, double tol) {
  SuiteResult r;
  r.name = "regular-closure";
  for (const Graph& g : graphs_up_to(max_n)) {
    const auto d = g.degrees();
    if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) != d.end()) continue;
    const double rho0 = alpha_index(g, 0.0, tol).rho;
    for (double a : {0.25, 0.5, 0.75}) {
      ++r.checked;
      const double rho = alpha_index(g, a, tol).rho;
      const double expected = a * d.front() + (1.0 - a) * rho0;
      if (std::abs(rho - expected) > kTieTol) {
        r.fail(write_graph6(g), ctx({{"alpha", format_real(a)}, {"rho", format_real(rho)},
                                     {"expected", format_real(expected)}}));
      }
    }
  }
  return r;
}

SuiteResult vertex_deletion_suite(int max_n, const std::vector<double>& alphas, double tol) {
  SuiteResult r;
  r.name = "vertex-deletion";
  for (const Graph& g : graphs_up_to(max_n)) {
    if (g.order() < 2) continue;
    for (double a : alphas) {
      const double rho = alpha_index(g, a, tol).rho;
      for (int v = 0; v < g.order(); ++v) {
        ++r.checked;
        const double sub = alpha_index(delete_vertex(g, v), a, tol).rho;
        if (sub > rho + kTieTol) {
          r.fail(write_graph6(g), ctx({{"vertex", std::to_string(v)}, {"alpha", format_real(a)},
                                       {"rho", format_real(rho)}, {"rho_sub", format_real(sub)}}));
        }
      }
    }
  }
  return r;
}

SuiteResult corollary_suite(Family family, int n_min, int n_max, double tol) {
  SuiteResult r;
  r.name = "signless-extremal-" + family.name();
  SearchOptions options;
  options.tol = tol;
  for (int n = n_min; n <= n_max; ++n) {
    ++r.checked;
    const SearchReport rep = search_extremal(n, 0.5, family, enumerate_graphs(n, false), options);
    if (!rep.matches_construction || !rep.unique) {
      r.fail(rep.argmax_graph6, ctx({{"n", std::to_string(n)}, {"q", format_real(2.0 * rep.max_rho)},
                                     {"ties", std::to_string(rep.ties.size())}}));
    }
  }
  return r;
}

SuiteResult clique_completion_suite(Family family, int samples, std::uint64_t seed) {
  const bool fs = family.kind == Family::Kind::Fs;
  SuiteResult r;
  r.name = "clique-completion-" + family.name();
  const int p = family.parameter;
  const Graph forbidden = family.forbidden();
  std::mt19937_64 rng(seed);
  // Smallest order at which |B| <= n - p can satisfy the size hypothesis.
  const int n_min = fs ? 3 * p + 1 : 6 * p + 1;
  for (int i = 0; i < samples; ++i) {
    const int n = std::uniform_int_distribution<int>(n_min, n_min + 3)(rng);
    const int b_min = fs ? (n + 2 * p + 2) / 2 : (2 * n + 3 * p + 3) / 3;
    if (b_min > n - p) continue;
    const int b = std::uniform_int_distribution<int>(b_min, n - p)(rng);
    Graph g(n);
    VertexSet a = VertexSet::range(p);
    VertexSet bset = VertexSet::range(p + b).minus(a);
    for (int u : a.members())
      for (int v : bset.members()) g.add_edge(u, v);
    const double density = std::uniform_real_distribution<double>(0.0, 0.15)(rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v) && !(a.contains(u) && bset.contains(v)) && std::bernoulli_distribution(density)(rng))
          g.add_edge(u, v);
    if (has_minor(g, forbidden).contains) continue;
    ++r.checked;
    const Graph completed = complete_clique(g, a);
    if (has_minor(completed, forbidden).contains) {
      r.fail(write_graph6(g), ctx({{"A", std::to_string(a.bits())}, {"B", std::to_string(bset.bits())}}));
    }
  }
  return r;
}

std::vector<DensityRow> density_table(Family family, int max_n) {
  std::vector<DensityRow> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(edge_density_profile(n, family, enumerate_graphs(n, false)));
  return rows;
}

}  // namespace alphax::cli
