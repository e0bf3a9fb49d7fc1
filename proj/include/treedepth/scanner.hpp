#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "treedepth/graph.hpp"

namespace tdk {

/// Largest order enumerated internally; larger scans take graph6 input.
inline constexpr int kMaxEnumerationOrder = 7;

/// One representative per isomorphism class of connected graphs on n vertices, in
/// canonical-code order. Throws std::invalid_argument unless 1 <= n <= 7.
std::vector<Graph> enumerate_connected(int n);
/// One representative per isomorphism class of trees on n vertices (1 <= n <= 16).
std::vector<Graph> enumerate_trees(int n);

struct Diagnostic {
  int line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<Diagnostic> diagnostics;
};

/// Newline-separated graph6 records; blank lines and a ">>graph6<<" header are skipped.
/// Malformed records become diagnostics. Throws std::runtime_error if unreadable.
IngestResult ingest_graph6(const std::filesystem::path& path);
IngestResult ingest_graph6(std::istream& in);

struct CriticalEntry {
  int k = 0;
  std::string graph6;  // canonical form
  int order = 0;
  int max_degree = 0;
  std::optional<bool> one_unique;  // filled by verify_conjectures

  bool operator==(const CriticalEntry&) const = default;
};

struct ConjectureAggregate {
  bool verified = false;
  std::vector<std::string> order_bound;  // counterexample graph6 strings
  std::vector<std::string> max_degree;
  std::vector<std::string> one_unique;

  bool clean() const { return order_bound.empty() && max_degree.empty() && one_unique.empty(); }
};

struct FormulaCheck {
  std::string instance;
  int expected = 0;
  int computed = 0;
  bool pass = false;
};

struct ScanReport {
  std::string source = "internal";  // internal | file
  int n_min = 0;
  int n_max = 0;
  int graphs_scanned = 0;
  std::vector<CriticalEntry> critical;  // sorted by (k, graph6), deduplicated
  ConjectureAggregate conjectures;
  std::vector<FormulaCheck> formulas;
  std::vector<Diagnostic> diagnostics;

  bool has_failures() const;
};

/// Raised when a report entry does not survive re-validation.
class ScanValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tree-depth and criticality for every graph; keeps the critical ones.
/// Output is independent of `jobs`.
ScanReport find_critical(std::span<const Graph> graphs, int jobs = 1);

/// Re-checks every entry is critical, then applies the three conjecture checks.
void verify_conjectures(ScanReport& report, int jobs = 1);

/// Path and cycle formulas, then the order of every critical tree up to tree_n_max vertices.
std::vector<FormulaCheck> verify_formulas(int n_max_path, int n_max_cycle, int tree_n_max);

/// Stable, pretty-printed JSON.
std::string to_json(const ScanReport& report);

/// Runs work(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work);

}  // namespace tdk
