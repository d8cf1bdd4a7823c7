#include "doctest.h"

#include <random>
#include <set>

#include "alphax/enumerate.hpp"
#include "alphax/errors.hpp"
#include "alphax/graph6.hpp"
#include "oracles.hpp"

using namespace alphax;

namespace {

// Graphs on n unlabeled vertices, all and connected (OEIS A000088, A001349).
constexpr std::uint64_t kAll[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
constexpr std::uint64_t kConnected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

bool same_search(const SearchReport& a, const SearchReport& b) {
  return a.n == b.n && a.alpha == b.alpha && a.family == b.family && a.total_graphs == b.total_graphs &&
         a.minor_free_count == b.minor_free_count && a.max_rho == b.max_rho &&
         a.argmax_graph6 == b.argmax_graph6 && a.argmax_canonical == b.argmax_canonical && a.ties == b.ties &&
         a.matches_construction == b.matches_construction && a.unique == b.unique;
}

}  // namespace

TEST_CASE("generation counts match the published sequences") {
  for (int n = 1; n <= 8; ++n) {
    CHECK_MESSAGE(enumerate_graphs(n, false).graphs.size() == kAll[n], "n = " << n);
    CHECK_MESSAGE(enumerate_graphs(n, true).graphs.size() == kConnected[n], "n = " << n);
  }
}

TEST_CASE("generation matches brute-force classification up to five vertices") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> brute;
    for (const Graph& g : oracle::all_labeled(n)) brute.insert(oracle::brute_canonical(g));
    std::set<std::string> generated;
    for (const Graph& g : enumerate_graphs(n, false).graphs) generated.insert(oracle::brute_canonical(g));
    CHECK(generated == brute);
  }
}

TEST_CASE("no two generated graphs share a canonical form") {
  for (int n = 1; n <= 7; ++n) {
    const GraphStream s = enumerate_graphs(n, false);
    std::set<CanonicalForm> forms;
    for (const Graph& g : s.graphs) {
      forms.insert(canonical_form(g));
      CHECK(g.order() == n);
    }
    CHECK(forms.size() == s.graphs.size());
  }
}

TEST_CASE("generation is deterministic and shards partition the classes") {
  const GraphStream whole = enumerate_graphs(7, false);
  CHECK(enumerate_graphs(7, false).graphs == whole.graphs);
  std::set<std::string> seen;
  std::size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    for (const Graph& g : enumerate_graphs(7, false, Shard{i, 3}).graphs) {
      seen.insert(write_graph6(g));
      ++total;
    }
  }
  CHECK(total == whole.graphs.size());
  CHECK(seen.size() == whole.graphs.size());
}

TEST_CASE("generation limits") {
  CHECK_THROWS_AS(enumerate_graphs(0, false), DomainError);
  CHECK_THROWS_AS(enumerate_graphs(10, false), CapacityError);
  CHECK_THROWS_AS(enumerate_graphs(4, false, Shard{3, 3}), DomainError);
}

TEST_CASE("external streams are canonicalized and deduplicated") {
  const std::vector<Graph> input{make_path(4), oracle::permuted(make_path(4), {3, 1, 0, 2}),
                                 make_complete_bipartite(1, 3)};
  const GraphStream s = stream_from_graphs(4, input);
  CHECK(s.graphs.size() == 2);
  CHECK(s.source == GraphStream::Source::Graph6File);
  const std::vector<Graph> mixed{make_path(4), make_path(5)};
  CHECK_THROWS_AS(stream_from_graphs(4, mixed), DomainError);
}

TEST_CASE("family helpers") {
  CHECK(Family::fs(1).name() == "fs(1)");
  CHECK(Family::qt(2).name() == "qt(2)");
  CHECK(isomorphic(Family::qt(1).forbidden(), make_cycle(4)));
  CHECK_FALSE(Family::fs(2).construction(2).has_value());
  CHECK(isomorphic(*Family::qt(1).construction(5), friendship(2)));
}

TEST_CASE("extremal search examples") {
  SUBCASE("forests on four vertices") {
    const SearchReport r = search_extremal(4, 0.5, Family::fs(1), enumerate_graphs(4, false));
    CHECK(r.total_graphs == 11);
    CHECK(r.minor_free_count == 6);
    CHECK(isomorphic(parse_graph6(r.argmax_graph6), make_complete_bipartite(1, 3)));
    CHECK(r.max_rho == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.matches_construction);
    CHECK(r.unique);
  }
  SUBCASE("quadrangle-free graphs on five vertices") {
    const SearchReport r = search_extremal(5, 0.5, Family::qt(1), enumerate_graphs(5, false));
    CHECK(r.total_graphs == 34);
    CHECK(isomorphic(parse_graph6(r.argmax_graph6), friendship(2)));
    CHECK(std::fabs(r.max_rho - oracle::alpha_index(friendship(2), 0.5)) <= 1e-9);
    CHECK(r.matches_construction);
    CHECK(r.unique);
  }
  SUBCASE("the triangle is excluded from its own family") {
    const SearchReport r = search_extremal(3, 0.5, Family::fs(1), enumerate_graphs(3, false));
    CHECK(r.total_graphs == 4);
    CHECK(r.minor_free_count == 3);
    CHECK(isomorphic(parse_graph6(r.argmax_graph6), make_path(3)));
    for (const auto& t : r.ties) CHECK_FALSE(isomorphic(parse_graph6(t), make_complete(3)));
  }
  SUBCASE("domain checks") {
    CHECK_THROWS_AS(search_extremal(4, 0.0, Family::fs(1), enumerate_graphs(4, false)), DomainError);
    CHECK_THROWS_AS(search_extremal(4, 1.0, Family::fs(1), enumerate_graphs(4, false)), DomainError);
    CHECK_THROWS_AS(search_extremal(5, 0.5, Family::fs(1), enumerate_graphs(4, false)), DomainError);
  }
}

TEST_CASE("search report invariants") {
  for (Family f : {Family::fs(1), Family::fs(2), Family::qt(1)})
    for (int n = f.parameter + 1; n <= 7; ++n) {
      const GraphStream stream = enumerate_graphs(n, false);
      MinorFreeCache cache(f);
      for (double a : {0.2, 0.5, 0.8}) {
        const SearchReport r = search_extremal(n, a, f, stream, cache);
        CHECK(std::find(r.ties.begin(), r.ties.end(), r.argmax_graph6) != r.ties.end());
        CHECK(std::is_sorted(r.ties.begin(), r.ties.end()));
        CHECK(r.unique == (r.ties.size() == 1));
        CHECK(r.argmax_canonical == canonical_form(parse_graph6(r.argmax_graph6)));
        const Graph construction = *f.construction(n);
        CHECK(r.max_rho >= oracle::alpha_index(construction, a) - 1e-9);
        if (r.matches_construction && f.kind == Family::Kind::Fs) {
          CHECK(std::fabs(r.max_rho - join_quotient_index(n, f.parameter, a)) <= 1e-9);
          CHECK(f_inequality(r.max_rho, n, f.parameter, a));
        }
      }
    }
}

TEST_CASE("argmax is stable under stream order") {
  std::mt19937_64 rng(9);
  GraphStream stream = enumerate_graphs(7, false);
  const SearchReport base = search_extremal(7, 0.4, Family::qt(1), stream);
  for (int k = 0; k < 3; ++k) {
    std::shuffle(stream.graphs.begin(), stream.graphs.end(), rng);
    CHECK(same_search(search_extremal(7, 0.4, Family::qt(1), stream), base));
  }
}

TEST_CASE("merging shard reports reproduces the whole search") {
  for (Family f : {Family::fs(1), Family::qt(1)}) {
    const SearchReport whole = search_extremal(7, 0.6, f, enumerate_graphs(7, false));
    std::vector<SearchReport> parts;
    for (int i = 0; i < 4; ++i) parts.push_back(search_extremal(7, 0.6, f, enumerate_graphs(7, false, Shard{i, 4})));
    const SearchReport left = merge_reports(merge_reports(merge_reports(parts[0], parts[1]), parts[2]), parts[3]);
    const SearchReport right = merge_reports(parts[3], merge_reports(parts[2], merge_reports(parts[1], parts[0])));
    CHECK(same_search(left, whole));
    CHECK(same_search(right, whole));
  }
  const SearchReport a = search_extremal(5, 0.5, Family::fs(1), enumerate_graphs(5, false));
  const SearchReport b = search_extremal(5, 0.6, Family::fs(1), enumerate_graphs(5, false));
  CHECK_THROWS_AS(merge_reports(a, b), DomainError);
}

TEST_CASE("edge density profile") {
  for (int n = 1; n <= 7; ++n) {
    const DensityRow row = edge_density_profile(n, Family::fs(1), enumerate_graphs(n, false));
    CHECK(row.max_edges == n - 1);
    CHECK(row.max_edges_per_vertex == doctest::Approx(double(n - 1) / n));
  }
  CHECK(edge_density_profile(1, Family::qt(2), enumerate_graphs(1, false)).max_edges == 0);
  int oracle_max = 0;
  std::uint64_t oracle_count = 0;
  for (const Graph& g : enumerate_graphs(5, false).graphs)
    if (!minor_closure_oracle(g, make_cycle(4))) {
      ++oracle_count;
      oracle_max = std::max(oracle_max, g.edge_count());
    }
  const DensityRow q5 = edge_density_profile(5, Family::qt(1), enumerate_graphs(5, false));
  CHECK(q5.max_edges == oracle_max);
  CHECK(q5.minor_free_count == oracle_count);
}
