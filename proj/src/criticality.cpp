#include "treedepth/criticality.hpp"

#include <stdexcept>

#include "treedepth/solver.hpp"

namespace tdk {

std::vector<std::pair<MinorStep, Graph>> one_step_minors(const Graph& g) {
  std::vector<std::pair<MinorStep, Graph>> out;
  for (int v = 0; v < g.order(); ++v) {
    MinorStep step{MinorStep::Kind::DeleteVertex, v, -1};
    out.emplace_back(step, apply(g, step));
  }
  const auto edges = g.edges();
  for (const auto& [u, v] : edges) {
    MinorStep step{MinorStep::Kind::ContractEdge, u, v};
    out.emplace_back(step, apply(g, step));
  }
  for (const auto& [u, v] : edges) {
    MinorStep step{MinorStep::Kind::DeleteEdge, u, v};
    out.emplace_back(step, apply(g, step));
  }
  return out;
}

CriticalityVerdict is_critical(const Graph& g) {
  CriticalityVerdict verdict;
  verdict.td = TreeDepthSolver(g).tree_depth();
  for (const auto& [step, minor] : one_step_minors(g)) {
    if (!tree_depth_below(minor, verdict.td)) {
      verdict.witness = step;
      return verdict;
    }
  }
  verdict.is_critical = true;
  return verdict;
}

namespace {

bool one_unique_with_td(const Graph& g, int v, int td, OneUniqueMethod method) {
  if (method == OneUniqueMethod::Oracle) return unique_one_ranking_exists(g, v);
  return tree_depth_below(star_clique_transform(g, v), td);
}

}  // namespace

bool is_one_unique_vertex(const Graph& g, int v, OneUniqueMethod method) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
  return one_unique_with_td(g, v, TreeDepthSolver(g).tree_depth(), method);
}

OneUniqueVerdict is_one_unique(const Graph& g, OneUniqueMethod method) {
  const int td = TreeDepthSolver(g).tree_depth();
  OneUniqueVerdict verdict;
  for (int v = 0; v < g.order(); ++v)
    if (!one_unique_with_td(g, v, td, method)) verdict.failing_vertices.push_back(v);
  if (!verdict.failing_vertices.empty()) {
    verdict.one_unique = false;
    verdict.failing_vertex = verdict.failing_vertices.front();
  }
  return verdict;
}

Graph edge_join(const Graph& g, const Graph& h, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
    throw std::out_of_range("edge_join endpoint out of range");
  const Graph both = disjoint_union(g, h);
  std::vector<std::uint64_t> adj(both.adjacency().begin(), both.adjacency().end());
  const int w = v + g.order();
  adj[u] |= std::uint64_t{1} << w;
  adj[w] |= std::uint64_t{1} << u;
  return Graph::from_adjacency(std::move(adj));
}

ConjectureVerdict check_conjectures(const Graph& g) {
  ConjectureVerdict verdict;
  verdict.k = TreeDepthSolver(g).tree_depth();
  const int k = verdict.k;
  verdict.order_bound = k >= 1 && g.order() <= (std::int64_t{1} << (k - 1));
  verdict.max_degree = g.max_degree() <= k - 1;
  verdict.one_unique = is_one_unique(g).one_unique;
  return verdict;
}

}  // namespace tdk
