#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "alphax/canonical.hpp"
#include "alphax/graph.hpp"
#include "alphax/minor.hpp"
#include "alphax/spectral.hpp"

namespace alphax {

inline constexpr int kMaxGeneratedOrder = 9;

/// Deterministic split of a generated class: the class goes to shard
/// mix(mask) % count, where mask is the neighbourhood of the last vertex of
/// its canonical labeling.
struct Shard {
  int index = 0;
  int count = 1;
};

/// Shard of a canonically labeled graph among `count` shards.
int shard_of(const Graph& canonical_graph, int count);

/// Graphs of one order, one canonically labeled representative per
/// isomorphism class.
struct GraphStream {
  int order = 0;
  bool connected_only = false;
  enum class Source { Generated, Graph6File } source = Source::Generated;
  std::vector<Graph> graphs;
};

/// Canonical augmentation: every class on n-1 vertices is extended by one
/// vertex in all 2^(n-1) ways; a child is kept iff deleting its canonical
/// last vertex gives back the parent class, and is deduplicated among the
/// children of that parent. Throws CapacityError for n > 9.
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit,
                    Shard shard = {});
GraphStream enumerate_graphs(int n, bool connected_only, Shard shard = {});

/// Wraps externally supplied graphs (e.g. a graph6 file) as a stream of
/// order n: graphs are canonically relabeled and duplicates dropped.
/// Throws DomainError if a graph has a different order.
GraphStream stream_from_graphs(int n, std::span<const Graph> graphs);

struct Family {
  enum class Kind { Fs, Qt } kind = Kind::Fs;
  int parameter = 1;

  static Family fs(int s) { return {Kind::Fs, s}; }
  static Family qt(int t) { return {Kind::Qt, t}; }
  std::string name() const;  // "fs(2)", "qt(1)"
  Graph forbidden() const;   // F_s or Q_t
  /// K_s v co-K_{n-s} or K_t v M_{n-t}; empty when n <= parameter.
  std::optional<Graph> construction(int n) const;
  bool operator==(const Family&) const = default;
};

/// Minor-freeness verdicts keyed by canonical form, shared across alpha
/// values of one run.
class MinorFreeCache {
 public:
  explicit MinorFreeCache(Family family, MinorOptions options = {}) : family_(family), options_(options) {}
  bool minor_free(const Graph& canonical_graph, const CanonicalForm& form);

 private:
  Family family_;
  MinorOptions options_;
  Graph forbidden_ = family_.forbidden();
  std::unordered_map<CanonicalForm, bool> verdicts_;
};

struct Candidate {
  std::string graph6;  // canonical graph6
  double rho = 0.0;
  double residual = 0.0;
  auto operator<=>(const Candidate&) const = default;
};

struct SearchReport {
  int n = 0;
  double alpha = 0.0;
  Family family;
  std::uint64_t total_graphs = 0;
  std::uint64_t minor_free_count = 0;
  double max_rho = 0.0;
  CanonicalForm argmax_canonical;
  std::string argmax_graph6;
  double argmax_residual = 0.0;
  std::vector<std::string> ties;  // canonical graph6, sorted; includes the argmax
  bool matches_construction = false;
  bool unique = false;
  std::chrono::nanoseconds wall_time{0};

  // Every graph within tie_tol of the running maximum; enough to rebuild the
  // final maximum and tie set when partial reports are merged.
  std::vector<Candidate> candidates;
  double tie_tol = kTieTol;
};

struct SearchOptions {
  double tol = kDefaultTol;
  double tie_tol = kTieTol;
};

/// Exhaustive extremal search over one stream. Requires 0 < alpha < 1.
SearchReport search_extremal(int n, double alpha, Family family, const GraphStream& stream,
                             MinorFreeCache& cache, const SearchOptions& options = {});
SearchReport search_extremal(int n, double alpha, Family family, const GraphStream& stream,
                             const SearchOptions& options = {});

/// Combines reports of disjoint shards of the same (n, alpha, family).
/// Associative and commutative up to wall_time.
SearchReport merge_reports(const SearchReport& a, const SearchReport& b);

struct DensityRow {
  int n = 0;
  std::uint64_t minor_free_count = 0;
  int max_edges = 0;
  double max_edges_per_vertex = 0.0;
};

/// Largest edge count over the minor-free graphs of the stream.
DensityRow edge_density_profile(int n, Family family, const GraphStream& stream);

}  // namespace alphax
