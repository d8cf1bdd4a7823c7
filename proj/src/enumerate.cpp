#include "alphax/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "alphax/errors.hpp"
#include "alphax/graph6.hpp"

namespace alphax {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph with_new_vertex(const Graph& parent, std::uint64_t mask) {
  const int m = parent.order();
  Graph child(m + 1);
  for (auto [u, v] : parent.edges()) child.add_edge(u, v);
  for (std::uint64_t b = mask; b != 0; b &= b - 1) child.add_edge(std::countr_zero(b), m);
  return child;
}

// Children of one canonical parent that pass the canonical-deletion test,
// deduplicated. Each is returned in canonical labeling.
template <typename Visit>
void augment(const Graph& parent, const CanonicalForm& parent_form, Visit&& visit) {
  const int m = parent.order();
  std::unordered_set<CanonicalForm> local;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph child = with_new_vertex(parent, mask);
    CanonicalLabeling lab = canonical_labeling(child);
    const int last = lab.order.back();
    if (last != m && lab.orbit[last] != lab.orbit[m]) {
      if (canonical_form(delete_vertex(child, last)) != parent_form) continue;
    }
    if (local.insert(lab.form).second) visit(lab);
  }
}

}  // namespace

int shard_of(const Graph& canonical_graph, int count) {
  const std::uint64_t mask = canonical_graph.row(canonical_graph.order() - 1);
  return static_cast<int>(splitmix64(mask) % static_cast<std::uint64_t>(count));
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit, Shard shard) {
  if (n < 1) throw DomainError("enumerate_graphs: order must be at least 1");
  if (n > kMaxGeneratedOrder) {
    throw CapacityError("enumerate_graphs: in-process generation stops at " + std::to_string(kMaxGeneratedOrder) +
                        " vertices; supply larger orders as a graph6 file");
  }
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) throw DomainError("enumerate_graphs: bad shard");

  auto emit = [&](const Graph& g) {
    if (connected_only && !is_connected(g)) return;
    if (shard.count > 1 && shard_of(g, shard.count) != shard.index) return;
    visit(g);
  };
  if (n == 1) {
    emit(Graph(1));
    return;
  }
  std::vector<std::pair<Graph, CanonicalForm>> level{{Graph(1), canonical_form(Graph(1))}};
  for (int m = 1; m < n - 1; ++m) {
    std::vector<std::pair<Graph, CanonicalForm>> next;
    for (const auto& [parent, form] : level) {
      augment(parent, form, [&](CanonicalLabeling& lab) { next.emplace_back(std::move(lab.graph), std::move(lab.form)); });
    }
    level = std::move(next);
  }
  for (const auto& [parent, form] : level) {
    augment(parent, form, [&](const CanonicalLabeling& lab) { emit(lab.graph); });
  }
}

GraphStream enumerate_graphs(int n, bool connected_only, Shard shard) {
  GraphStream stream;
  stream.order = n;
  stream.connected_only = connected_only;
  for_each_graph(n, connected_only, [&](const Graph& g) { stream.graphs.push_back(g); }, shard);
  return stream;
}

GraphStream stream_from_graphs(int n, std::span<const Graph> graphs) {
  GraphStream stream;
  stream.order = n;
  stream.source = GraphStream::Source::Graph6File;
  std::unordered_set<CanonicalForm> seen;
  for (const Graph& g : graphs) {
    if (g.order() != n) {
      throw DomainError("stream_from_graphs: graph of order " + std::to_string(g.order()) + " in a stream of order " +
                        std::to_string(n));
    }
    auto lab = canonical_labeling(g);
    if (seen.insert(lab.form).second) stream.graphs.push_back(std::move(lab.graph));
  }
  return stream;
}

std::string Family::name() const {
  return (kind == Kind::Fs ? "fs(" : "qt(") + std::to_string(parameter) + ")";
}

Graph Family::forbidden() const { return kind == Kind::Fs ? friendship(parameter) : quadrangle_book(parameter); }

std::optional<Graph> Family::construction(int n) const {
  if (n <= parameter) return std::nullopt;
  return kind == Kind::Fs ? extremal_fs(n, parameter) : extremal_qt(n, parameter);
}

bool MinorFreeCache::minor_free(const Graph& canonical_graph, const CanonicalForm& form) {
  if (auto it = verdicts_.find(form); it != verdicts_.end()) return it->second;
  const bool free = !has_minor(canonical_graph, forbidden_, options_).contains;
  verdicts_.emplace(form, free);
  return free;
}

namespace {

void finalize(SearchReport& r) {
  if (r.candidates.empty()) {
    if (r.minor_free_count > 0) throw std::logic_error("search_extremal: minor-free graphs but no candidate");
    return;
  }
  const auto best = std::min_element(r.candidates.begin(), r.candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (x.rho != y.rho) return x.rho > y.rho;
    return x.graph6 < y.graph6;
  });
  r.max_rho = best->rho;
  r.argmax_graph6 = best->graph6;
  r.argmax_residual = best->residual;
  r.argmax_canonical = CanonicalForm{best->graph6};
  const double floor = r.max_rho - r.tie_tol;
  std::erase_if(r.candidates, [&](const Candidate& c) { return c.rho < floor; });
  std::sort(r.candidates.begin(), r.candidates.end());
  r.ties.clear();
  for (const auto& c : r.candidates) r.ties.push_back(c.graph6);
  std::sort(r.ties.begin(), r.ties.end());
  r.unique = r.ties.size() == 1;
  const auto construction = r.family.construction(r.n);
  r.matches_construction = construction && canonical_form(*construction) == r.argmax_canonical;
}

}  // namespace

SearchReport search_extremal(int n, double alpha, Family family, const GraphStream& stream, MinorFreeCache& cache,
                             const SearchOptions& options) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("search_extremal: alpha must lie in (0, 1)");
  if (stream.order != n) throw DomainError("search_extremal: stream order differs from n");
  const auto started = std::chrono::steady_clock::now();
  SearchReport r;
  r.n = n;
  r.alpha = alpha;
  r.family = family;
  r.tie_tol = options.tie_tol;
  double running_max = -1.0;
  for (const Graph& g : stream.graphs) {
    ++r.total_graphs;
    // Stream graphs are canonically labeled, so their graph6 is the form.
    const CanonicalForm form{write_graph6(g)};
    if (!cache.minor_free(g, form)) continue;
    ++r.minor_free_count;
    const SpectralResult sr = alpha_index(g, alpha, options.tol);
    if (sr.rho < running_max - options.tie_tol) continue;
    r.candidates.push_back({form.bytes, sr.rho, sr.residual});
    if (sr.rho > running_max) {
      running_max = sr.rho;
      std::erase_if(r.candidates, [&](const Candidate& c) { return c.rho < running_max - options.tie_tol; });
    }
  }
  finalize(r);
  r.wall_time = std::chrono::steady_clock::now() - started;
  return r;
}

SearchReport search_extremal(int n, double alpha, Family family, const GraphStream& stream,
                             const SearchOptions& options) {
  MinorFreeCache cache(family);
  return search_extremal(n, alpha, family, stream, cache, options);
}

SearchReport merge_reports(const SearchReport& a, const SearchReport& b) {
  if (a.n != b.n || a.alpha != b.alpha || !(a.family == b.family)) {
    throw DomainError("merge_reports: reports describe different searches");
  }
  SearchReport r;
  r.n = a.n;
  r.alpha = a.alpha;
  r.family = a.family;
  r.tie_tol = a.tie_tol;
  r.total_graphs = a.total_graphs + b.total_graphs;
  r.minor_free_count = a.minor_free_count + b.minor_free_count;
  r.candidates = a.candidates;
  r.candidates.insert(r.candidates.end(), b.candidates.begin(), b.candidates.end());
  finalize(r);
  r.wall_time = a.wall_time + b.wall_time;
  return r;
}

DensityRow edge_density_profile(int n, Family family, const GraphStream& stream) {
  DensityRow row;
  row.n = n;
  MinorFreeCache cache(family);
  for (const Graph& g : stream.graphs) {
    if (!cache.minor_free(g, CanonicalForm{write_graph6(g)})) continue;
    ++row.minor_free_count;
    row.max_edges = std::max(row.max_edges, g.edge_count());
  }
  row.max_edges_per_vertex = n > 0 ? static_cast<double>(row.max_edges) / n : 0.0;
  return row;
}

}  // namespace alphax
