#include "treedepth/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdk {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices)
    throw std::out_of_range("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(Graph::kMaxVertices));
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
}

void check_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.adjacent(u, v))
    throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + "-" +
                              std::to_string(v) + " with n=" + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adjacency) {
  check_order(static_cast<int>(adjacency.size()));
  Graph g;
  g.adj_ = std::move(adjacency);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (auto word : adj_) twice += std::popcount(word);
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (auto word : adj_) best = std::max(best, std::popcount(word));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::string to_string(const MinorStep& step) {
  switch (step.kind) {
    case MinorStep::Kind::DeleteVertex:
      return "delete-vertex(" + std::to_string(step.u) + ")";
    case MinorStep::Kind::DeleteEdge:
      return "delete-edge(" + std::to_string(step.u) + "," + std::to_string(step.v) + ")";
    case MinorStep::Kind::ContractEdge:
      return "contract-edge(" + std::to_string(step.u) + "," + std::to_string(step.v) + ")";
  }
  return {};
}

Relabeled induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v : keep) map[v] = next++;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(next), 0);
  for (int v : keep)
    for (int w : g.neighbors(v) & keep) adj[map[v]] |= std::uint64_t{1} << map[w];
  return {Graph::from_adjacency(std::move(adj)), std::move(map)};
}

Relabeled delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.vertices().without(v));
}

Graph delete_edge(const Graph& g, int u, int v) {
  check_edge(g, u, v);
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  adj[u] &= ~(std::uint64_t{1} << v);
  adj[v] &= ~(std::uint64_t{1} << u);
  return Graph::from_adjacency(std::move(adj));
}

Relabeled contract_edge(const Graph& g, int u, int v) {
  check_edge(g, u, v);
  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  const VertexSet merged = (g.neighbors(keep) | g.neighbors(gone)).without(keep).without(gone);
  adj[keep] = merged.bits();
  for (int w : merged) adj[w] |= std::uint64_t{1} << keep;
  Relabeled out = induced_subgraph(Graph::from_adjacency(std::move(adj)),
                                   g.vertices().without(gone));
  out.map[gone] = out.map[keep];
  return out;
}

Graph apply(const Graph& g, const MinorStep& step) {
  switch (step.kind) {
    case MinorStep::Kind::DeleteVertex:
      return delete_vertex(g, step.u).graph;
    case MinorStep::Kind::DeleteEdge:
      return delete_edge(g, step.u, step.v);
    case MinorStep::Kind::ContractEdge:
      return contract_edge(g, step.u, step.v).graph;
  }
  throw std::logic_error("unknown minor step");
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  within &= g.vertices();
  std::vector<VertexSet> out;
  while (!within.empty()) {
    VertexSet comp = VertexSet::single(within.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    within -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > Graph::kMaxVertices)
    throw std::out_of_range("disjoint union has " + std::to_string(n) + " vertices, limit is " +
                            std::to_string(Graph::kMaxVertices));
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  for (auto word : h.adjacency()) adj.push_back(word << g.order());
  return Graph::from_adjacency(std::move(adj));
}

Graph quotient_closure(const Graph& g, VertexSet s) {
  s &= g.vertices();
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  for (auto& word : adj) word &= s.bits();
  for (VertexSet comp : components(g, g.vertices() - s)) {
    VertexSet touched;
    for (int w : comp) touched |= g.neighbors(w);
    touched &= s;
    for (int u : touched) adj[u] |= touched.without(u).bits();
  }
  auto closed = Graph::from_adjacency(std::move(adj));
  return induced_subgraph(closed, s).graph;
}

Graph star_clique_transform(const Graph& g, int v) {
  check_vertex(g, v);
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  const VertexSet nbrs = g.neighbors(v);
  for (int u : nbrs) adj[u] |= nbrs.without(u).bits();
  return delete_vertex(Graph::from_adjacency(std::move(adj)), v).graph;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation length does not match graph order");
  VertexSet seen;
  for (int target : perm) {
    if (target < 0 || target >= g.order() || seen.contains(target))
      throw std::invalid_argument("relabeling is not a permutation");
    seen = seen.with(target);
  }
  std::vector<std::uint64_t> adj(perm.size(), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int w : g.neighbors(u)) adj[perm[u]] |= std::uint64_t{1} << perm[w];
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace tdk
