#include "alphax/minor.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "alphax/canonical.hpp"
#include "alphax/errors.hpp"

namespace alphax {
namespace {

bool touches(const Graph& g, VertexSet a, VertexSet b) {
  for (int v : a.members())
    if (!(g.neighbors(v) & b).empty()) return true;
  return false;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  std::uint64_t out = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) out |= g.row(std::countr_zero(b));
  return VertexSet(out).minus(s);
}

struct StateHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : key) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Branch sets are indexed by position in the processing order, not by
// H-vertex label.
class BranchSetSearch {
 public:
  BranchSetSearch(const Graph& g, const Graph& h, const MinorOptions& options)
      : g_(g), h_(h), cap_(options.node_cap), k_(h.order()) {
    order_processing();
    sets_.assign(static_cast<std::size_t>(k_), VertexSet{});
    if (g.order() > 0) root_candidates_ = orbit_representatives();
  }

  bool run() { return step(); }

  MinorModel model() const {
    MinorModel m;
    m.branch_sets.assign(static_cast<std::size_t>(k_), VertexSet{});
    for (int p = 0; p < k_; ++p) m.branch_sets[order_[p]] = sets_[p];
    return m;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void order_processing() {
    std::vector<bool> chosen(static_cast<std::size_t>(k_), false);
    position_.assign(static_cast<std::size_t>(k_), -1);
    for (int step = 0; step < k_; ++step) {
      int best = -1;
      long key_best = -1;
      for (int v = 0; v < k_; ++v) {
        if (chosen[v]) continue;
        int back = 0;
        for (int w : h_.neighbors(v).members()) back += chosen[w] ? 1 : 0;
        const long key = static_cast<long>(back) * 1000 + h_.degree(v) * 10;
        if (key > key_best) {
          key_best = key;
          best = v;
        }
      }
      chosen[best] = true;
      position_[best] = step;
      order_.push_back(best);
    }
    earlier_.assign(static_cast<std::size_t>(k_), {});
    neighbors_.assign(static_cast<std::size_t>(k_), {});
    for (int p = 0; p < k_; ++p) {
      for (int w : h_.neighbors(order_[p]).members()) {
        neighbors_[p].push_back(position_[w]);
        if (position_[w] < p) earlier_[p].push_back(position_[w]);
      }
      std::sort(earlier_[p].begin(), earlier_[p].end());
    }
  }

  // The first H-vertex may be rooted in one vertex per automorphism orbit
  // of G.
  VertexSet orbit_representatives() const {
    const auto lab = canonical_labeling(g_);
    VertexSet reps;
    for (int v = 0; v < g_.order(); ++v)
      if (lab.orbit[v] == v) reps.insert(v);
    return reps;
  }

  bool feasible(VertexSet unused) const {
    int unplaced = 0;
    for (int p = 0; p < k_; ++p) unplaced += sets_[p].empty() ? 1 : 0;
    if (unplaced > unused.size()) return false;
    for (int p = 0; p < k_; ++p) {
      if (sets_[p].empty()) continue;
      // Vertices that could still join branch set p.
      const VertexSet region = reachable(g_, sets_[p], sets_[p] | unused).minus(sets_[p]);
      int waiting = 0;
      for (int q : neighbors_[p]) {
        if (sets_[q].empty()) {
          ++waiting;
        } else if (!touches(g_, sets_[p], sets_[q])) {
          // q must become adjacent to p through vertices only p or q can take.
          const VertexSet grown = reachable(g_, sets_[p], sets_[p] | unused);
          if ((open_neighborhood(g_, grown) & sets_[q]).empty() && (grown & sets_[q]).empty()) return false;
        }
      }
      if (waiting > region.size()) return false;
    }
    return true;
  }

  bool step() {
    if (++nodes_ > cap_) throw ResourceError("has_minor: search node cap exceeded", nodes_ - 1);
    VertexSet used;
    for (VertexSet s : sets_) used = used | s;
    const VertexSet unused = VertexSet::range(g_.order()).minus(used);

    int target = -1;
    int partner = -1;
    for (int p = 0; p < k_ && target < 0; ++p) {
      if (sets_[p].empty()) {
        target = p;
        break;
      }
      for (int q : earlier_[p]) {
        if (!touches(g_, sets_[p], sets_[q])) {
          target = p;
          partner = q;
          break;
        }
      }
    }
    if (target < 0) return true;
    if (!feasible(unused)) return false;

    std::vector<std::uint64_t> key(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) key[i] = sets_[i].bits();
    if (failed_.contains(key)) return false;

    if (partner < 0) {
      const VertexSet roots = target == 0 ? (root_candidates_ & unused) : unused;
      for (int r : roots.members()) {
        sets_[target] = VertexSet{r};
        if (step()) return true;
      }
      sets_[target] = VertexSet{};
    } else {
      for (int side : {target, partner}) {
        const VertexSet saved = sets_[side];
        for (int u : (open_neighborhood(g_, saved) & unused).members()) {
          sets_[side] = saved | VertexSet{u};
          if (step()) return true;
        }
        sets_[side] = saved;
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::uint64_t cap_;
  int k_;
  std::vector<int> order_;     // position -> H-vertex
  std::vector<int> position_;  // H-vertex -> position
  std::vector<std::vector<int>> earlier_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<VertexSet> sets_;
  VertexSet root_candidates_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<std::vector<std::uint64_t>, StateHash> failed_;
};

void check_bipartite_block(const Graph& g, int size_a, int min_b, VertexSet a, VertexSet b, const char* what) {
  const VertexSet all = VertexSet::range(g.order());
  if (!a.subset_of(all) || !b.subset_of(all)) throw DomainError(std::string(what) + ": sets outside V(G)");
  if (!(a & b).empty()) throw DomainError(std::string(what) + ": A and B intersect");
  if (a.size() != size_a) throw DomainError(std::string(what) + ": |A| does not match the parameter");
  if (b.size() < min_b) throw DomainError(std::string(what) + ": B is too small");
  for (int v : a.members())
    if (!b.subset_of(g.neighbors(v))) throw DomainError(std::string(what) + ": G[A,B] is not complete bipartite");
}

}  // namespace

MinorVerdict has_minor(const Graph& g, const Graph& h, const MinorOptions& options) {
  if (h.order() > kMaxMinorOrder) throw DomainError("has_minor: H has more than 12 vertices");
  MinorVerdict verdict;
  if (h.order() == 0) {
    verdict.contains = true;
    verdict.model = MinorModel{};
    return verdict;
  }
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return verdict;
  BranchSetSearch search(g, h, options);
  verdict.contains = search.run();
  verdict.nodes_explored = search.nodes();
  if (verdict.contains) verdict.model = search.model();
  return verdict;
}

bool validate_model(const Graph& g, const Graph& h, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != h.order()) return false;
  const VertexSet all = VertexSet::range(g.order());
  VertexSet used;
  for (VertexSet s : model.branch_sets) {
    if (s.empty() || !s.subset_of(all) || !(s & used).empty()) return false;
    if (!is_connected_subset(g, s)) return false;
    used = used | s;
  }
  for (auto [a, b] : h.edges()) {
    bool linked = false;
    for (int u : model.branch_sets[a].members()) linked = linked || !(g.neighbors(u) & model.branch_sets[b]).empty();
    if (!linked) return false;
  }
  return true;
}

bool minor_closure_oracle(const Graph& g, const Graph& h) {
  if (g.order() > 7) throw DomainError("minor_closure_oracle: G has more than 7 vertices");
  if (h.order() == 0) return true;
  const int need_vertices = h.order();
  const int need_edges = h.edge_count();
  std::unordered_set<CanonicalForm> seen;
  std::deque<Graph> queue;
  const auto start = canonical_labeling(g);
  seen.insert(start.form);
  queue.push_back(start.graph);
  while (!queue.empty()) {
    Graph x = std::move(queue.front());
    queue.pop_front();
    if (contains_subgraph(x, h)) return true;
    for (auto [u, v] : x.edges()) {
      Graph deleted = x;
      deleted.remove_edge(u, v);
      Graph contracted = contract_edge(x, u, v);
      for (Graph* child : {&deleted, &contracted}) {
        if (child->order() < need_vertices || child->edge_count() < need_edges) continue;
        auto lab = canonical_labeling(*child);
        if (seen.insert(lab.form).second) queue.push_back(std::move(lab.graph));
      }
    }
  }
  return false;
}

bool is_fs_minor_free(const Graph& g, int s, const MinorOptions& options) {
  return !has_minor(g, friendship(s), options).contains;
}

bool is_qt_minor_free(const Graph& g, int t, const MinorOptions& options) {
  return !has_minor(g, quadrangle_book(t), options).contains;
}

std::string StructureWitness::describe() const {
  std::string out;
  switch (kind) {
    case Kind::EdgeInsideB: out = "edge inside B:"; break;
    case Kind::PathInsideB: out = "path on three vertices inside B (centre first):"; break;
    case Kind::OutsideDegreeIntoB: out = "outside vertex with too many B-neighbours (vertex first):"; break;
  }
  for (int v : vertices) out += " " + std::to_string(v);
  return out;
}

StructureReport check_fs_structure(const Graph& g, int s, VertexSet a, VertexSet b) {
  if (s < 1) throw DomainError("check_fs_structure: s must be at least 1");
  check_bipartite_block(g, s, 2 * s, a, b, "check_fs_structure");
  StructureReport report;
  for (int u : b.members()) {
    for (int v : (g.neighbors(u) & b).members()) {
      if (u < v) report.violations.push_back({StructureWitness::Kind::EdgeInsideB, {u, v}});
    }
  }
  const VertexSet outside = VertexSet::range(g.order()).minus(a | b);
  for (int v : outside.members()) {
    const VertexSet into = g.neighbors(v) & b;
    if (into.size() > 1) {
      std::vector<int> witness{v};
      for (int w : into.members()) witness.push_back(w);
      report.violations.push_back({StructureWitness::Kind::OutsideDegreeIntoB, std::move(witness)});
    }
  }
  return report;
}

StructureReport check_qt_structure(const Graph& g, int t, VertexSet a, VertexSet b) {
  if (t < 1) throw DomainError("check_qt_structure: t must be at least 1");
  check_bipartite_block(g, t, 2 * t + 1, a, b, "check_qt_structure");
  StructureReport report;
  for (int u : b.members()) {
    const auto inside = (g.neighbors(u) & b).members();
    if (inside.size() >= 2) {
      report.violations.push_back({StructureWitness::Kind::PathInsideB, {u, inside[0], inside[1]}});
    }
  }
  const VertexSet outside = VertexSet::range(g.order()).minus(a | b);
  for (int v : outside.members()) {
    const VertexSet into = g.neighbors(v) & b;
    if (into.size() > 2) {
      std::vector<int> witness{v};
      for (int w : into.members()) witness.push_back(w);
      report.violations.push_back({StructureWitness::Kind::OutsideDegreeIntoB, std::move(witness)});
    }
  }
  return report;
}

}  // namespace alphax
