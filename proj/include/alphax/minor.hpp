#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphax/graph.hpp"

namespace alphax {

/// branch_sets[h] is the set of G-vertices contracted onto H-vertex h.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

struct MinorVerdict {
  bool contains = false;
  std::optional<MinorModel> model;
  std::uint64_t nodes_explored = 0;
};

struct MinorOptions {
  std::uint64_t node_cap = 100'000'000;
};

inline constexpr int kMaxMinorOrder = 12;

/// Exact H-minor test by branch-set embedding search. H-vertices are rooted
/// in a fixed descending-degree order and branch sets grow one adjacent
/// vertex at a time, only to realize a missing H-edge. Throws ResourceError
/// when the node cap is hit.
MinorVerdict has_minor(const Graph& g, const Graph& h, const MinorOptions& options = {});

/// Re-checks a certificate from scratch: nonempty, disjoint, connected
/// branch sets inside V(G) with a G-edge between the sets of every H-edge.
bool validate_model(const Graph& g, const Graph& h, const MinorModel& model);

/// Independent oracle for |V(G)| <= 7: closes G under edge deletion and
/// edge contraction (deduplicated by canonical form) and looks for H as a
/// subgraph of some member.
bool minor_closure_oracle(const Graph& g, const Graph& h);

bool is_fs_minor_free(const Graph& g, int s, const MinorOptions& options = {});
bool is_qt_minor_free(const Graph& g, int t, const MinorOptions& options = {});

/// One violation of the structural conclusions about the bipartite block B.
struct StructureWitness {
  enum class Kind { EdgeInsideB, PathInsideB, OutsideDegreeIntoB };
  Kind kind;
  std::vector<int> vertices;  // edge endpoints, path centre + two ends, or outside vertex + its B-neighbours
  std::string describe() const;
};

struct StructureReport {
  std::vector<StructureWitness> violations;
  bool ok() const { return violations.empty(); }
};

/// For F_s-minor-free G with G[A,B] complete bipartite, |A| = s, |B| >= 2s:
/// B is independent and every vertex outside A and B has at most one
/// neighbour in B. Violations are returned, preconditions throw DomainError.
StructureReport check_fs_structure(const Graph& g, int s, VertexSet a, VertexSet b);

/// For Q_t-minor-free G with G[A,B] complete bipartite, |A| = t,
/// |B| >= 2t+1: G[B] has maximum degree at most 1 and every vertex outside
/// A and B has at most two neighbours in B.
StructureReport check_qt_structure(const Graph& g, int t, VertexSet a, VertexSet b);

}  // namespace alphax
