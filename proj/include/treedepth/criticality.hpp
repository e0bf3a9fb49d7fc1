#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treedepth/graph.hpp"

namespace tdk {

struct CriticalityVerdict {
  bool is_critical = false;
  int td = 0;
  /// First one-step minor whose tree-depth did not drop; present iff !is_critical.
  std::optional<MinorStep> witness;
};

/// Every one-step minor in a fixed order: vertex deletions, then edge contractions,
/// then edge deletions, each ascending by endpoint.
std::vector<std::pair<MinorStep, Graph>> one_step_minors(const Graph& g);

/// One-step minors suffice because tree-depth is minor-monotone.
CriticalityVerdict is_critical(const Graph& g);

enum class OneUniqueMethod { StarClique, Oracle };

/// StarClique: td(star_clique_transform(G, v)) < td(G). Oracle: exhaustive ranking search.
bool is_one_unique_vertex(const Graph& g, int v, OneUniqueMethod method = OneUniqueMethod::StarClique);

struct OneUniqueVerdict {
  bool one_unique = true;
  std::optional<int> failing_vertex;
  /// Every vertex that is not 1-unique, ascending.
  std::vector<int> failing_vertices;
};

OneUniqueVerdict is_one_unique(const Graph& g, OneUniqueMethod method = OneUniqueMethod::StarClique);

/// disjoint_union(g, h) plus the edge u -- (v + |V(g)|).
Graph edge_join(const Graph& g, const Graph& h, int u, int v);

struct ConjectureVerdict {
  int k = 0;
  bool order_bound = false;  // |V| <= 2^(k-1)
  bool max_degree = false;   // max degree <= k-1
  bool one_unique = false;

  bool all() const { return order_bound && max_degree && one_unique; }
};

/// Meaningful only for a graph already known to be critical.
ConjectureVerdict check_conjectures(const Graph& g);

}  // namespace tdk
