#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tdk {

/// Set of vertex ids in 0..63 packed into one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet with(int v) const { return VertexSet{bits_ | (std::uint64_t{1} << v)}; }
  constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~(std::uint64_t{1} << v)}; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto tmp = *this; ++*this; return tmp; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u;
  int v;
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1, n <= 62, one adjacency word per vertex.
/// Values are immutable once built; every operation below returns a new graph.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on a self-loop, std::out_of_range on a bad endpoint
  /// or n outside 0..62. Duplicate pairs collapse.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Adjacency words are trusted to be symmetric and loop-free.
  static Graph from_adjacency(std::vector<std::uint64_t> adjacency);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return VertexSet{adj_[v]}; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int max_degree() const;
  /// Sorted with u < v.
  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> adjacency() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::uint64_t> adj_;
};

/// A graph produced by deleting or merging vertices, with map[old] = new id or -1.
struct Relabeled {
  Graph graph;
  std::vector<int> map;
};

struct MinorStep {
  enum class Kind { DeleteVertex, DeleteEdge, ContractEdge };
  Kind kind;
  int u;
  int v;  // unused for DeleteVertex

  bool operator==(const MinorStep&) const = default;
};

std::string to_string(const MinorStep& step);

Relabeled delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
/// The merged vertex sits at min(u, v)'s slot before renumbering.
Relabeled contract_edge(const Graph& g, int u, int v);
Graph apply(const Graph& g, const MinorStep& step);

Relabeled induced_subgraph(const Graph& g, VertexSet keep);
/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// G<S>: the graph on S where u ~ v if adjacent in G or some component of G - S
/// has neighbours of both. Vertices of S are renumbered in increasing order.
Graph quotient_closure(const Graph& g, VertexSet s);
Graph star_clique_transform(const Graph& g, int v);
/// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Isomorphism-invariant code: equal iff the graphs are isomorphic.
std::string canonical_code(const Graph& g);
/// The representative of g's isomorphism class that canonical_code encodes.
Graph canonical_form(const Graph& g);

}  // namespace tdk
