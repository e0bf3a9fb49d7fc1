#include "treedepth/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdk {

namespace {

// td never exceeds 62, so this limit always yields exact answers.
constexpr int kUnbounded = 64;
constexpr int kPathBudget = 512;

// Shortest path from `from` to the nearest other vertex of `targets`, moving inside `within`.
std::vector<int> nearest_path(const Graph& g, int from, VertexSet targets, VertexSet within) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = VertexSet::single(from);
  std::vector<int> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int y : (g.neighbors(x) & within) - seen) {
      parent[y] = x;
      seen = seen.with(y);
      if (targets.contains(y)) {
        std::vector<int> path{y};
        while (path.back() != from) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return {};
}

}  // namespace

int Ranking::k() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
}

RankingCheck check_ranking(const Graph& g, const Ranking& r) {
  if (static_cast<int>(r.labels.size()) != g.order())
    throw std::invalid_argument("ranking has " + std::to_string(r.labels.size()) +
                                " labels for " + std::to_string(g.order()) + " vertices");
  const int k = r.k();
  std::vector<VertexSet> by_label(static_cast<std::size_t>(k) + 1);
  for (int v = 0; v < g.order(); ++v) {
    if (r.labels[v] < 1)
      throw std::invalid_argument("label " + std::to_string(r.labels[v]) + " at vertex " +
                                  std::to_string(v) + " is below 1");
    by_label[r.labels[v]] = by_label[r.labels[v]].with(v);
  }

  VertexSet upto;
  for (int c = 1; c <= k; ++c) {
    upto |= by_label[c];
    if (by_label[c].size() < 2) continue;
    for (VertexSet comp : components(g, upto)) {
      const VertexSet top = comp & by_label[c];
      if (top.size() < 2) continue;
      const int from = top.first();
      return {false, nearest_path(g, from, top.without(from), comp)};
    }
  }
  return {};
}

TreeDepthSolver::TreeDepthSolver(Graph g) : g_(std::move(g)) {}

bool TreeDepthSolver::is_clique(VertexSet s) const {
  for (int v : s)
    if (!s.without(v).subset_of(g_.neighbors(v))) return false;
  return true;
}

int TreeDepthSolver::lower_bound(VertexSet s) const {
  // Greedy clique from every start vertex.
  int clique = 1;
  for (int start : s) {
    VertexSet candidates = g_.neighbors(start) & s;
    int size = 1;
    while (!candidates.empty()) {
      int pick = -1;
      int pick_degree = -1;
      for (int w : candidates) {
        const int d = (g_.neighbors(w) & candidates).size();
        if (d > pick_degree) {
          pick = w;
          pick_degree = d;
        }
      }
      ++size;
      candidates &= g_.neighbors(pick);
    }
    clique = std::max(clique, size);
  }

  // Budgeted DFS for a long path; a path on L vertices forces td >= floor(log2 L) + 1.
  std::vector<int> starts = s.to_vector();
  std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) {
    return (g_.neighbors(a) & s).size() < (g_.neighbors(b) & s).size();
  });
  int budget = kPathBudget;
  int longest = 1;
  auto dfs = [&](auto&& self, int v, VertexSet visited, int length) -> void {
    longest = std::max(longest, length);
    if (--budget <= 0 || longest == s.size()) return;
    for (int w : (g_.neighbors(v) & s) - visited) {
      self(self, w, visited.with(w), length + 1);
      if (budget <= 0 || longest == s.size()) return;
    }
  };
  for (int start : starts) {
    if (budget <= 0 || longest == s.size()) break;
    dfs(dfs, start, VertexSet::single(start), 1);
  }
  const int path_bound = std::bit_width(static_cast<unsigned>(longest));

  return std::max(clique, path_bound);
}

int TreeDepthSolver::greedy_upper_bound(VertexSet s) const {
  int worst = 0;
  for (VertexSet comp : components(g_, s)) {
    if (comp.size() <= 2) {
      worst = std::max(worst, comp.size());
      continue;
    }
    // Remove the vertex leaving the smallest largest component.
    int pick = -1;
    int pick_largest = kUnbounded;
    for (int v : comp) {
      int largest = 0;
      for (VertexSet rest : components(g_, comp.without(v)))
        largest = std::max(largest, rest.size());
      if (largest < pick_largest) {
        pick = v;
        pick_largest = largest;
      }
    }
    worst = std::max(worst, 1 + greedy_upper_bound(comp.without(pick)));
  }
  return worst;
}

// Exact td of the connected set s if it is below `limit`; otherwise some value in
// [limit, td(s)].
int TreeDepthSolver::bounded(VertexSet s, int limit) {
  const int size = s.size();
  if (size <= 1) return size;

  int lb = 0;
  auto found = memo_.find(s.bits());
  if (found != memo_.end()) {
    if (found->second.exact || found->second.value >= limit) return found->second.value;
    lb = found->second.value;
  } else {
    if (is_clique(s)) {
      memo_.emplace(s.bits(), Entry{size, true});
      return size;
    }
    lb = lower_bound(s);
  }
  if (lb >= limit) {
    memo_[s.bits()] = Entry{lb, false};
    return lb;
  }

  std::vector<int> order = s.to_vector();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return (g_.neighbors(a) & s).size() > (g_.neighbors(b) & s).size();
  });

  // Looking for td(s) < best.
  int best = std::min(limit, size + 1);
  for (int v : order) {
    auto parts = components(g_, s.without(v));
    std::stable_sort(parts.begin(), parts.end(),
                     [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    int worst = 0;
    bool improves = true;
    for (VertexSet part : parts) {
      const int sub = bounded(part, best - 1);
      if (sub >= best - 1) {
        improves = false;
        break;
      }
      worst = std::max(worst, sub);
    }
    if (improves) {
      best = worst + 1;
      if (best <= lb) break;
    }
  }

  if (best < limit) {
    memo_[s.bits()] = Entry{best, true};
    return best;
  }
  memo_[s.bits()] = Entry{limit, false};
  return limit;
}

int TreeDepthSolver::tree_depth(VertexSet s) {
  s &= g_.vertices();
  int worst = 0;
  for (VertexSet comp : components(g_, s))
    worst = std::max(worst, bounded(comp, greedy_upper_bound(comp) + 1));
  return worst;
}

bool TreeDepthSolver::tree_depth_below(VertexSet s, int limit) {
  s &= g_.vertices();
  for (VertexSet comp : components(g_, s))
    if (bounded(comp, limit) >= limit) return false;
  return true;
}

void TreeDepthSolver::assign(VertexSet s, std::vector<int>& labels) {
  for (VertexSet comp : components(g_, s)) {
    const int td = bounded(comp, kUnbounded);
    if (comp.size() == 1) {
      labels[comp.first()] = 1;
      continue;
    }
    for (int v : comp) {
      auto parts = components(g_, comp.without(v));
      const bool optimal = std::all_of(parts.begin(), parts.end(),
                                       [&](VertexSet p) { return bounded(p, td) < td; });
      if (!optimal) continue;
      labels[v] = td;
      for (VertexSet p : parts) assign(p, labels);
      break;
    }
  }
}

TdResult TreeDepthSolver::solve() {
  TdResult result;
  result.td = tree_depth();
  result.certificate.labels.assign(static_cast<std::size_t>(g_.order()), 0);
  assign(g_.vertices(), result.certificate.labels);
  return result;
}

TdResult tree_depth(const Graph& g) { return TreeDepthSolver(g).solve(); }

bool tree_depth_below(const Graph& g, int limit) {
  return TreeDepthSolver(g).tree_depth_below(g.vertices(), limit);
}

int separator_term(const Graph& g, VertexSet s) {
  s &= g.vertices();
  const Graph closure = quotient_closure(g, s);
  const Graph rest = induced_subgraph(g, g.vertices() - s).graph;
  return TreeDepthSolver(closure).tree_depth() + TreeDepthSolver(rest).tree_depth();
}

SeparatorResult tree_depth_via_separators(const Graph& g) {
  if (g.order() > 10)
    throw std::invalid_argument("separator enumeration is limited to 10 vertices, got " +
                                std::to_string(g.order()));
  SeparatorResult best{kUnbounded, VertexSet{}};
  const std::uint64_t subsets = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const int term = separator_term(g, VertexSet{bits});
    if (term < best.td) best = {term, VertexSet{bits}};
  }
  return best;
}

namespace {

class UniqueOneSearch {
 public:
  UniqueOneSearch(const Graph& g, int v, int k) : g_(g), k_(k), by_label_(k + 1) {
    // Visit vertices breadth-first from v so constraints bite early.
    VertexSet placed = VertexSet::single(v);
    order_.push_back(v);
    auto sweep = [&] {
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head)
        for (int w : g_.neighbors(order_[head]) - placed) {
          placed = placed.with(w);
          order_.push_back(w);
        }
    };
    sweep();
    for (int w = 0; w < g_.order(); ++w) {
      if (placed.contains(w)) continue;
      placed = placed.with(w);
      order_.push_back(w);
      sweep();
    }
    by_label_[1] = VertexSet::single(v);
  }

  bool run(std::size_t index = 1) {
    if (index == order_.size()) return true;
    const int x = order_[index];
    for (int c = 2; c <= k_; ++c) {
      by_label_[c] = by_label_[c].with(x);
      if (consistent() && run(index + 1)) return true;
      by_label_[c] = by_label_[c].without(x);
    }
    return false;
  }

 private:
  // Violations among already-labelled vertices cannot be repaired later.
  bool consistent() const {
    VertexSet upto;
    for (int c = 1; c <= k_; ++c) {
      upto |= by_label_[c];
      if (by_label_[c].size() < 2) continue;
      for (VertexSet comp : components(g_, upto))
        if ((comp & by_label_[c]).size() > 1) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  std::vector<int> order_;
  std::vector<VertexSet> by_label_;
};

}  // namespace

bool unique_one_ranking_exists(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
  const int k = TreeDepthSolver(g).tree_depth();
  if (g.order() == 1) return true;
  if (k < 2) return false;
  return UniqueOneSearch(g, v, k).run();
}

}  // namespace tdk
