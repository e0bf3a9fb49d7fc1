#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "treedepth/graph.hpp"

namespace tdk {

/// Vertex labelling with colours 1..k, indexed by vertex id.
struct Ranking {
  std::vector<int> labels;

  /// Largest label present (0 for the empty labelling).
  int k() const;
  bool operator==(const Ranking&) const = default;
};

struct RankingCheck {
  bool valid = true;
  /// On failure: a path whose endpoints share a label c and whose interior labels are below c.
  std::vector<int> violating_path;
};

/// A labelling is a ranking iff, for each colour c, every component of the subgraph
/// induced by labels <= c holds at most one vertex labelled c.
/// Throws std::invalid_argument if the ranking does not cover V(G) or has a label < 1.
RankingCheck check_ranking(const Graph& g, const Ranking& r);
inline bool is_valid_ranking(const Graph& g, const Ranking& r) { return check_ranking(g, r).valid; }

struct TdResult {
  int td = 0;
  Ranking certificate;
};

/// Exact tree-depth over induced subgraphs of one base graph.
///
/// td(S) is the max over components; for a connected S it is 1 + min over v of
/// td(S - v). Results are memoised per vertex subset, and a subset may carry only a
/// lower bound when it was last asked under a tighter limit. Not thread-safe; use
/// one instance per thread.
class TreeDepthSolver {
 public:
  explicit TreeDepthSolver(Graph g);

  const Graph& graph() const { return g_; }

  int tree_depth(VertexSet s);
  int tree_depth() { return tree_depth(g_.vertices()); }
  /// True iff td(G[s]) < limit; cheaper than the exact value when the answer is no.
  bool tree_depth_below(VertexSet s, int limit);
  /// Exact value plus an optimal ranking. Ties on the top vertex of each component go
  /// to the smallest id.
  TdResult solve();

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    int value;
    bool exact;
  };

  int bounded(VertexSet s, int limit);
  int lower_bound(VertexSet s) const;
  int greedy_upper_bound(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  void assign(VertexSet s, std::vector<int>& labels);

  Graph g_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

TdResult tree_depth(const Graph& g);
bool tree_depth_below(const Graph& g, int limit);

/// td(G<S>) + td(G - S).
int separator_term(const Graph& g, VertexSet s);

struct SeparatorResult {
  int td = 0;
  /// First minimising S in increasing bit order.
  VertexSet witness;
};

/// Minimum of separator_term over every S subset of V(G); exponential, n <= 10 only.
SeparatorResult tree_depth_via_separators(const Graph& g);

/// Backtracking search for an optimal ranking in which v is the only vertex labelled 1.
/// Intended as an oracle for n <= 12.
bool unique_one_ranking_exists(const Graph& g, int v);

}  // namespace tdk
