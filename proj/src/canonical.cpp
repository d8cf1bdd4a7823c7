#include "alphax/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "alphax/graph6.hpp"

namespace alphax {
namespace {

using Cells = std::vector<std::uint64_t>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Cells root;
    if (n_ > 0) root.push_back(VertexSet::range(n_).bits());
    descend(std::move(root));
  }

  std::vector<int> best_order;
  std::vector<std::vector<int>> generators;
  std::size_t leaves = 0;

  std::vector<int> orbits(std::size_t fixed_prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators) {
      bool fixes = true;
      for (std::size_t i = 0; i < fixed_prefix && fixes; ++i) fixes = gen[prefix_[i]] == prefix_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

 private:
  // Splits every cell by neighbour count into `splitter`; sub-cells ordered
  // by ascending count. Returns true if anything split.
  bool split_all(Cells& cells, std::uint64_t splitter) const {
    bool changed = false;
    Cells out;
    out.reserve(static_cast<std::size_t>(n_));
    int count_of[kMaxOrder];
    for (std::uint64_t cell : cells) {
      if ((cell & (cell - 1)) == 0) {
        out.push_back(cell);
        continue;
      }
      std::uint64_t seen_counts = 0;  // counts are < 64
      for (std::uint64_t b = cell; b != 0; b &= b - 1) {
        const int v = std::countr_zero(b);
        count_of[v] = std::popcount(g_.row(v) & splitter);
        seen_counts |= std::uint64_t{1} << count_of[v];
      }
      if ((seen_counts & (seen_counts - 1)) == 0) {
        out.push_back(cell);
        continue;
      }
      changed = true;
      for (std::uint64_t c = seen_counts; c != 0; c &= c - 1) {
        const int k = std::countr_zero(c);
        std::uint64_t part = 0;
        for (std::uint64_t b = cell; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          if (count_of[v] == k) part |= std::uint64_t{1} << v;
        }
        out.push_back(part);
      }
    }
    if (changed) cells = std::move(out);
    return changed;
  }

  void refine(Cells& cells) const {
    std::size_t i = 0;
    while (i < cells.size()) {
      if (split_all(cells, cells[i])) {
        i = 0;
      } else {
        ++i;
      }
    }
  }

  std::vector<std::uint64_t> leaf_rows(const std::vector<int>& order) const {
    int position[kMaxOrder];
    for (int i = 0; i < n_; ++i) position[order[i]] = i;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (std::uint64_t b = g_.row(order[i]); b != 0; b &= b - 1) {
        r |= std::uint64_t{1} << position[std::countr_zero(b)];
      }
      rows[i] = r;
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gen(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gen[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators.push_back(std::move(gen));
  }

  void leaf(const Cells& cells) {
    ++leaves;
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) order[i] = std::countr_zero(cells[i]);
    auto rows = leaf_rows(order);
    if (first_order_.empty()) {
      first_order_ = order;
      first_rows_ = rows;
      best_order = order;
      best_rows_ = std::move(rows);
      return;
    }
    if (rows == first_rows_) {
      record_automorphism(first_order_, order);
      return;
    }
    const auto cmp = rows <=> best_rows_;
    if (cmp == 0) {
      record_automorphism(best_order, order);
    } else if (cmp < 0) {
      best_order = std::move(order);
      best_rows_ = std::move(rows);
    }
  }

  void descend(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    int target_size = kMaxOrder + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int sz = std::popcount(cells[i]);
      if (sz > 1 && sz < target_size) {
        target = i;
        target_size = sz;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const std::uint64_t cell = cells[target];
    for (std::uint64_t b = cell; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      // Automorphisms fixing the current prefix pointwise map the subtree of
      // v onto the subtree of its orbit minimum.
      if (!generators.empty()) {
        const auto orb = orbits(prefix_.size());
        if (orb[v] != v) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(std::uint64_t{1} << v);
      child.push_back(cell & ~(std::uint64_t{1} << v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      prefix_.push_back(v);
      descend(std::move(child));
      prefix_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> prefix_;
  std::vector<int> first_order_;
  std::vector<std::uint64_t> first_rows_;
  std::vector<std::uint64_t> best_rows_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  CanonSearch search(g);
  search.run();
  CanonicalLabeling out;
  out.order = search.best_order;
  out.graph = relabel(g, out.order);
  out.form = CanonicalForm{write_graph6(out.graph)};
  out.orbit = search.orbits(0);
  out.leaves = search.leaves;
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace alphax
