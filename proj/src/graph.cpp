#include "alphax/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "alphax/errors.hpp"

namespace alphax {
namespace {

void check_order(long long n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative order");
  if (n > kMaxOrder) {
    throw CapacityError(std::string(what) + ": order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxOrder));
  }
}

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::range(int n) {
  return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int order) {
  check_order(order, "Graph");
  rows_.assign(static_cast<std::size_t>(order), 0);
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) d[v] = std::popcount(rows_[v]);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t b = rows_[u] & ~((bit(u) << 1) - 1); b != 0; b &= b - 1) {
      out.emplace_back(u, std::countr_zero(b));
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw DomainError("add_edge: loops are not allowed");
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw DomainError("add_edge: vertex out of range");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw DomainError("remove_edge: vertex out of range");
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_empty(int n) { return Graph(n); }

Graph make_path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw DomainError("make_cycle: need at least 3 vertices");
  Graph g = make_path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph make_complete_bipartite(int m, int n) {
  check_order(static_cast<long long>(m) + n, "make_complete_bipartite");
  return join(make_empty(m), make_empty(n));
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_order(static_cast<long long>(g.order()) + h.order(), "disjoint_union");
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph k_copies(int k, const Graph& g) {
  if (k < 0) throw DomainError("k_copies: negative count");
  check_order(static_cast<long long>(k) * g.order(), "k_copies");
  Graph out(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph friendship(int s) {
  if (s < 1) throw DomainError("friendship: s must be at least 1");
  check_order(2LL * s + 1, "friendship");
  return join(make_complete(1), k_copies(s, make_complete(2)));
}

Graph quadrangle_book(int t) {
  if (t < 1) throw DomainError("quadrangle_book: t must be at least 1");
  check_order(3LL * t + 1, "quadrangle_book");
  Graph g(3 * t + 1);
  for (int i = 0; i < t; ++i) {
    const int a = 3 * i + 1;
    g.add_edge(0, a);
    g.add_edge(a, a + 1);
    g.add_edge(a + 1, a + 2);
    g.add_edge(a + 2, 0);
  }
  return g;
}

Graph matching_graph(int m) {
  Graph g(m);
  for (int v = 0; v + 1 < m; v += 2) g.add_edge(v, v + 1);
  return g;
}

Graph extremal_fs(int n, int s) {
  if (s < 1 || n <= s) throw DomainError("extremal_fs: need n > s >= 1");
  return join(make_complete(s), make_empty(n - s));
}

Graph extremal_qt(int n, int t) {
  if (t < 1 || n <= t) throw DomainError("extremal_qt: need n > t >= 1");
  return join(make_complete(t), matching_graph(n - t));
}

std::pair<int, long long> intersection_lower_bound(std::span<const VertexSet> sets) {
  if (sets.empty()) throw DomainError("intersection_lower_bound: empty family");
  VertexSet inter = sets.front();
  VertexSet uni;
  long long total = 0;
  for (VertexSet s : sets) {
    inter = inter & s;
    uni = uni | s;
    total += s.size();
  }
  const long long k = static_cast<long long>(sets.size());
  return {inter.size(), total - (k - 1) * uni.size()};
}

VertexSet reachable(const Graph& g, VertexSet from, VertexSet through) {
  std::uint64_t seen = from.bits();
  std::uint64_t frontier = seen;
  const std::uint64_t allowed = through.bits();
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

bool is_connected_subset(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  return reachable(g, VertexSet(std::uint64_t{1} << s.first()), s) == s;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return is_connected_subset(g, VertexSet::range(g.order()));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  if (u == v || !g.adjacent(u, v)) throw DomainError("contract_edge: not an edge");
  Graph merged = g;
  for (int w : g.neighbors(v).members())
    if (w != u) merged.add_edge(u, w);
  return delete_vertex(merged, v);
}

Graph relabel(const Graph& g, std::span<const int> order) {
  return induced_subgraph(g, order);
}

Graph complete_clique(const Graph& g, VertexSet a) {
  Graph out = g;
  const auto members = a.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) out.add_edge(members[i], members[j]);
  return out;
}

namespace {

struct SubgraphMatcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;  // h-vertices in matching order
  std::vector<int> image;  // h-vertex -> g-vertex or -1
  std::uint64_t used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int x = order[depth];
    std::uint64_t candidates = VertexSet::range(g.order()).bits() & ~used;
    for (int y : h.neighbors(x).members())
      if (image[y] >= 0) candidates &= g.row(image[y]);
    for (; candidates != 0; candidates &= candidates - 1) {
      const int c = std::countr_zero(candidates);
      if (g.degree(c) < h.degree(x)) continue;
      image[x] = c;
      used |= std::uint64_t{1} << c;
      if (extend(depth + 1)) return true;
      used &= ~(std::uint64_t{1} << c);
      image[x] = -1;
    }
    return false;
  }
};

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return false;
  SubgraphMatcher m{g, h, {}, std::vector<int>(static_cast<std::size_t>(h.order()), -1)};
  // Greedy order: next vertex has the most already-ordered neighbours,
  // ties by degree. Keeps adjacency constraints tight early.
  std::vector<bool> placed(static_cast<std::size_t>(h.order()), false);
  for (int step = 0; step < h.order(); ++step) {
    int best = -1;
    int best_key = -1;
    for (int v = 0; v < h.order(); ++v) {
      if (placed[v]) continue;
      int back = 0;
      for (int w : h.neighbors(v).members()) back += placed[w] ? 1 : 0;
      const int key = back * kMaxOrder + h.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    placed[best] = true;
    m.order.push_back(best);
  }
  return m.extend(0);
}

}  // namespace alphax
