#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace alphax {

inline constexpr int kMaxOrder = 64;

/// Set of vertices of a host graph, one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  static VertexSet range(int n);  // {0, ..., n-1}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  int first() const { return std::countr_zero(bits_); }
  std::vector<int> members() const;

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected simple graph on at most 64 vertices. Row v of the adjacency
/// relation is a bitmask of the neighbours of v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  std::span<const std::uint64_t> rows() const { return rows_; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;
  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;  // (u, v) with u < v, sorted

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::uint64_t> rows_;
};

Graph make_complete(int n);
Graph make_empty(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete_bipartite(int m, int n);

/// Disjoint copies of g and h plus every edge between them. g keeps labels
/// 0..|g|-1, h is shifted up by |g|.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph k_copies(int k, const Graph& g);
Graph complement(const Graph& g);

/// F_s = K_1 v sK_2: s triangles sharing vertex 0.
Graph friendship(int s);
/// Q_t: t quadrangles sharing vertex 0. Quadrangle i uses 3i+1..3i+3 with
/// 3i+2 opposite the hub.
Graph quadrangle_book(int t);
/// M_m: floor(m/2) disjoint edges; for odd m the isolated vertex is m-1.
Graph matching_graph(int m);
/// K_s v co-K_{n-s}; clique on 0..s-1.
Graph extremal_fs(int n, int s);
/// K_t v M_{n-t}; clique on 0..t-1.
Graph extremal_qt(int n, int t);

/// Returns (|N_1 cap ... cap N_k|, sum |N_i| - (k-1)|N_1 cup ... cup N_k|).
std::pair<int, long long> intersection_lower_bound(std::span<const VertexSet> sets);

// Structural helpers shared by the spectral, minor and enumeration code.
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, VertexSet s);
/// Vertices reachable from `from` through vertices of `through` (from included).
VertexSet reachable(const Graph& g, VertexSet from, VertexSet through);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph delete_vertex(const Graph& g, int v);
/// Merges v into u (u < v kept), drops loops and parallel edges, then
/// removes v so that labels above v shift down by one.
Graph contract_edge(const Graph& g, int u, int v);
/// Relabels so that new vertex i is old vertex order[i].
Graph relabel(const Graph& g, std::span<const int> order);
/// Adds every missing edge inside `a`.
Graph complete_clique(const Graph& g, VertexSet a);
/// True when h is isomorphic to a (not necessarily induced) subgraph of g.
bool contains_subgraph(const Graph& g, const Graph& h);

}  // namespace alphax
