#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

/// Relabeling-invariant encoding of an isomorphism class: the graph6 string
/// of the canonically relabeled graph.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  std::vector<int> order;  // canonical position -> original vertex
  Graph graph;             // relabel(g, order)
  CanonicalForm form;
  std::vector<int> orbit;  // orbit representative (smallest vertex) under the automorphisms found
  std::size_t leaves = 0;  // search-tree leaves visited
};

/// Equitable-partition refinement, individualization of the first smallest
/// non-singleton cell, and pruning by automorphisms discovered at leaves.
/// The canonical graph is the lexicographically smallest leaf.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace alphax

template <>
struct std::hash<alphax::CanonicalForm> {
  std::size_t operator()(const alphax::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};
