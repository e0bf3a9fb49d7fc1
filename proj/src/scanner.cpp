#include "treedepth/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <tuple>
#include <thread>

#include <json.hpp>

#include "treedepth/codec.hpp"
#include "treedepth/criticality.hpp"
#include "treedepth/families.hpp"
#include "treedepth/solver.hpp"

namespace tdk {

namespace {

using ClassMap = std::map<std::string, Graph>;

Graph with_new_vertex(const Graph& g, VertexSet attach) {
  std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
  const int v = g.order();
  for (int u : attach) adj[u] |= std::uint64_t{1} << v;
  adj.push_back(attach.bits());
  return Graph::from_adjacency(std::move(adj));
}

std::vector<Graph> values(const ClassMap& classes) {
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (const auto& [code, g] : classes) out.push_back(g);
  return out;
}

// All graphs on n vertices up to isomorphism. Every graph on n vertices is some
// (n-1)-vertex class representative plus one vertex, so extending each class by
// every neighbourhood reaches every class.
ClassMap all_graphs(int n) {
  ClassMap level{{canonical_code(Graph(1)), Graph(1)}};
  for (int m = 2; m <= n; ++m) {
    ClassMap next;
    for (const auto& [code, g] : level) {
      const std::uint64_t masks = std::uint64_t{1} << g.order();
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        const Graph h = with_new_vertex(g, VertexSet{mask});
        auto key = canonical_code(h);
        if (!next.contains(key)) next.emplace(std::move(key), canonical_form(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::string trim(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
  return line.substr(start);
}

}  // namespace

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(drain);
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("internal enumeration covers 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder) + ", got " +
                                std::to_string(n) + "; use graph6 input for larger orders");
  std::vector<Graph> out;
  for (auto& g : values(all_graphs(n)))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("tree enumeration covers 1 <= n <= 16, got " + std::to_string(n));
  ClassMap level{{canonical_code(Graph(1)), Graph(1)}};
  for (int m = 2; m <= n; ++m) {
    ClassMap next;
    for (const auto& [code, g] : level) {
      for (int v = 0; v < g.order(); ++v) {
        const Graph h = with_new_vertex(g, VertexSet::single(v));
        auto key = canonical_code(h);
        if (!next.contains(key)) next.emplace(std::move(key), canonical_form(h));
      }
    }
    level = std::move(next);
  }
  return values(level);
}

IngestResult ingest_graph6(std::istream& in) {
  IngestResult result;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(std::move(line));
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    try {
      result.graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      result.diagnostics.push_back({number, e.what()});
    }
  }
  return result;
}

IngestResult ingest_graph6(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return ingest_graph6(in);
}

bool ScanReport::has_failures() const {
  return !conjectures.clean() ||
         std::any_of(formulas.begin(), formulas.end(), [](const FormulaCheck& f) { return !f.pass; });
}

ScanReport find_critical(std::span<const Graph> graphs, int jobs) {
  std::vector<std::optional<CriticalEntry>> found(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    if (g.order() == 0) return;
    const auto verdict = is_critical(g);
    if (!verdict.is_critical) return;
    found[i] = CriticalEntry{verdict.td, emit_graph6(canonical_form(g)), g.order(),
                             g.max_degree(), std::nullopt};
  });

  ScanReport report;
  report.graphs_scanned = static_cast<int>(graphs.size());
  if (!graphs.empty()) {
    auto [lo, hi] = std::minmax_element(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
      return a.order() < b.order();
    });
    report.n_min = lo->order();
    report.n_max = hi->order();
  }
  for (auto& entry : found)
    if (entry) report.critical.push_back(std::move(*entry));
  std::sort(report.critical.begin(), report.critical.end(), [](const auto& a, const auto& b) {
    return std::tie(a.k, a.graph6) < std::tie(b.k, b.graph6);
  });
  report.critical.erase(std::unique(report.critical.begin(), report.critical.end(),
                                    [](const auto& a, const auto& b) { return a.graph6 == b.graph6; }),
                        report.critical.end());
  return report;
}

void verify_conjectures(ScanReport& report, int jobs) {
  std::vector<std::optional<ConjectureVerdict>> verdicts(report.critical.size());
  std::vector<std::string> rejections(report.critical.size());
  parallel_for(report.critical.size(), jobs, [&](std::size_t i) {
    const auto& entry = report.critical[i];
    const Graph g = parse_graph6(entry.graph6);
    const auto crit = is_critical(g);
    if (!crit.is_critical || crit.td != entry.k || g.order() != entry.order) {
      rejections[i] = "entry " + entry.graph6 + " (k=" + std::to_string(entry.k) +
                      ") is not a critical graph of that tree-depth";
      return;
    }
    verdicts[i] = check_conjectures(g);
  });
  for (const auto& message : rejections)
    if (!message.empty()) throw ScanValidationError(message);

  ConjectureAggregate agg;
  for (std::size_t i = 0; i < report.critical.size(); ++i) {
    auto& entry = report.critical[i];
    const auto& v = *verdicts[i];
    entry.one_unique = v.one_unique;
    if (!v.order_bound) agg.order_bound.push_back(entry.graph6);
    if (!v.max_degree) agg.max_degree.push_back(entry.graph6);
    if (!v.one_unique) agg.one_unique.push_back(entry.graph6);
  }
  agg.verified = true;
  report.conjectures = std::move(agg);
}

std::vector<FormulaCheck> verify_formulas(int n_max_path, int n_max_cycle, int tree_n_max) {
  std::vector<FormulaCheck> rows;
  auto record = [&](std::string instance, int expected, int computed) {
    rows.push_back({std::move(instance), expected, computed, expected == computed});
  };
  for (int n = 1; n <= n_max_path; ++n) {
    const auto spec = FamilySpec::path(n);
    record(spec.name(), expected_treedepth(spec), tree_depth(generate(spec)).td);
  }
  for (int n = 3; n <= n_max_cycle; ++n) {
    const auto spec = FamilySpec::cycle(n);
    record(spec.name(), expected_treedepth(spec), tree_depth(generate(spec)).td);
  }
  for (int n = 1; n <= tree_n_max; ++n) {
    for (const auto& tree : enumerate_trees(n)) {
      const auto verdict = is_critical(tree);
      if (!verdict.is_critical) continue;
      record("critical-tree " + emit_graph6(tree) + " k=" + std::to_string(verdict.td),
             1 << (verdict.td - 1), tree.order());
    }
  }
  return rows;
}

std::string to_json(const ScanReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["provenance"] = {{"source", report.source},
                     {"n_min", report.n_min},
                     {"n_max", report.n_max},
                     {"graphs_scanned", report.graphs_scanned}};

  auto by_k = ordered_json::array();
  for (std::size_t i = 0; i < report.critical.size();) {
    const int k = report.critical[i].k;
    auto graphs = ordered_json::array();
    for (; i < report.critical.size() && report.critical[i].k == k; ++i) {
      const auto& e = report.critical[i];
      ordered_json item{{"graph6", e.graph6}, {"order", e.order}, {"max_degree", e.max_degree}};
      item["one_unique"] = e.one_unique ? ordered_json(*e.one_unique) : ordered_json(nullptr);
      graphs.push_back(std::move(item));
    }
    by_k.push_back({{"k", k}, {"count", graphs.size()}, {"graphs", std::move(graphs)}});
  }
  j["critical"] = std::move(by_k);

  const auto& c = report.conjectures;
  j["conjectures"] = {
      {"verified", c.verified},
      {"order_at_most_2_pow_k_minus_1", {{"counterexamples", c.order_bound}}},
      {"max_degree_at_most_k_minus_1", {{"counterexamples", c.max_degree}}},
      {"critical_implies_one_unique", {{"counterexamples", c.one_unique}}},
  };

  auto formulas = ordered_json::array();
  for (const auto& f : report.formulas)
    formulas.push_back({{"instance", f.instance},
                        {"expected", f.expected},
                        {"computed", f.computed},
                        {"pass", f.pass}});
  j["formulas"] = std::move(formulas);

  auto diagnostics = ordered_json::array();
  for (const auto& d : report.diagnostics)
    diagnostics.push_back({{"line", d.line}, {"message", d.message}});
  j["diagnostics"] = std::move(diagnostics);
  return j.dump(2) + "\n";
}

}  // namespace tdk
