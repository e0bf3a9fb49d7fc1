// Canonical labelling by individualisation-refinement.
//
// Cells are refined to an equitable ordered partition; if it is not discrete the
// first smallest non-singleton cell is split by individualising each of its
// vertices in turn, and the lexicographically least adjacency code over all
// discrete leaves is the canonical code. Twins (equal neighbourhoods up to each
// other) inside the target cell are interchangeable by an automorphism that fixes
// the current partition, so only one per twin class is branched on.

#include <algorithm>
#include <optional>

#include "treedepth/graph.hpp"

namespace tdk {

namespace {

using Cells = std::vector<std::vector<int>>;

void refine(const Graph& g, Cells& cells) {
  std::vector<int> cell_of(static_cast<std::size_t>(g.order()));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);

    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> counts(cells.size(), 0);
        for (int w : g.neighbors(v)) ++counts[cell_of[w]];
        keyed.emplace_back(std::move(counts), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          std::vector<int> part;
          for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
          next.push_back(std::move(part));
          start = i;
        }
      }
    }
    changed = next.size() != cells.size();
    cells = std::move(next);
  }
}

std::string encode(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::string code(1, static_cast<char>(n));
  unsigned char byte = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      byte = static_cast<unsigned char>((byte << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
      if (++filled == 8) {
        code.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) code.push_back(static_cast<char>(byte << (8 - filled)));
  return code;
}

bool twins(const Graph& g, int u, int w) {
  return g.neighbors(u).without(w) == g.neighbors(w).without(u);
}

struct Search {
  const Graph& g;
  std::optional<std::string> best_code;
  std::vector<int> best_order;

  void run(Cells cells) {
    refine(g, cells);
    std::optional<std::size_t> target;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (!target || cells[c].size() < cells[*target].size())) target = c;

    if (!target) {
      std::vector<int> order;
      for (const auto& cell : cells) order.push_back(cell.front());
      auto code = encode(g, order);
      if (!best_code || code < *best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
      }
      return;
    }

    const auto& cell = cells[*target];
    std::vector<int> reps;
    for (int v : cell)
      if (std::none_of(reps.begin(), reps.end(), [&](int r) { return twins(g, r, v); }))
        reps.push_back(v);

    for (int v : reps) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != *target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      run(std::move(child));
    }
  }
};

Search canonical_search(const Graph& g) {
  Search search{g, std::nullopt, {}};
  Cells unit(1);
  for (int v = 0; v < g.order(); ++v) unit[0].push_back(v);
  if (g.order() == 0) unit.clear();
  search.run(std::move(unit));
  return search;
}

}  // namespace

std::string canonical_code(const Graph& g) {
  if (g.order() == 0) return std::string(1, '\0');
  return *canonical_search(g).best_code;
}

Graph canonical_form(const Graph& g) {
  if (g.order() == 0) return g;
  const auto search = canonical_search(g);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int pos = 0; pos < g.order(); ++pos) perm[search.best_order[pos]] = pos;
  return relabel(g, perm);
}

}  // namespace tdk
