#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "property_checks.hpp"
#include "treedepth/codec.hpp"
#include "treedepth/criticality.hpp"
#include "treedepth/families.hpp"
#include "treedepth/scanner.hpp"
#include "treedepth/solver.hpp"

using namespace tdk;

namespace {

std::vector<Graph> connected_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_connected(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::set<std::string> critical_codes(const ScanReport& report) {
  std::set<std::string> out;
  for (const auto& entry : report.critical) out.insert(entry.graph6);
  return out;
}

bool listed(const ScanReport& report, const Graph& g) {
  return critical_codes(report).count(emit_graph6(canonical_form(g))) == 1;
}

// Criticality recomputed from scratch: naive td on every one-step minor.
bool naive_critical(const Graph& g) {
  const int td = oracle::naive_td(g);
  for (int v = 0; v < g.order(); ++v)
    if (oracle::naive_td(delete_vertex(g, v).graph) >= td) return false;
  for (const auto& [u, v] : g.edges()) {
    if (oracle::naive_td(delete_edge(g, u, v)) >= td) return false;
    if (oracle::naive_td(contract_edge(g, u, v).graph) >= td) return false;
  }
  return true;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    path = std::filesystem::temp_directory_path() /
           ("tdk_scan_" + std::to_string(std::hash<std::string>{}(content)) + ".g6");
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE_BEGIN("scanner");

TEST_CASE("enumerate_connected") {
  CHECK(enumerate_connected(1).size() == 1);
  CHECK(enumerate_connected(4).size() == 6);
  CHECK(enumerate_connected(5).size() == 21);
  CHECK(enumerate_connected(7).size() == 853);
  CHECK_THROWS_AS(enumerate_connected(8), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);

  SUBCASE("matches labelled enumeration") {
    for (int n = 1; n <= 6; ++n) {
      const auto graphs = enumerate_connected(n);
      CHECK(graphs.size() == oracle::count_connected_classes(n));
      std::set<std::uint64_t> classes;
      for (const auto& g : graphs) {
        CHECK(g.order() == n);
        CHECK(is_connected(g));
        classes.insert(oracle::brute_force_class(g));
      }
      CHECK(classes.size() == graphs.size());
    }
  }
  CHECK(enumerate_connected(6) == enumerate_connected(6));
}

TEST_CASE("enumerate_trees") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    const auto trees = enumerate_trees(n);
    CHECK(trees.size() == expected[n - 1]);
    for (const auto& t : trees) {
      CHECK(t.size() == n - 1);
      CHECK(is_connected(t));
    }
  }
}

TEST_CASE("ingest_graph6") {
  SUBCASE("single record") {
    TempFile file("A_\n");
    const auto result = ingest_graph6(file.path);
    REQUIRE(result.graphs.size() == 1);
    CHECK(result.graphs[0] == gen_complete(2));
    CHECK(result.diagnostics.empty());
  }
  SUBCASE("empty file") {
    TempFile file("");
    const auto result = ingest_graph6(file.path);
    CHECK(result.graphs.empty());
    CHECK(result.diagnostics.empty());
  }
  SUBCASE("one bad line among three") {
    TempFile file("A_\nA@\nBw\n");
    const auto result = ingest_graph6(file.path);
    CHECK(result.graphs.size() == 2);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].line == 2);
  }
  SUBCASE("header, blank lines and CRLF") {
    std::istringstream in(">>graph6<<Bw\r\n\nCh\n");
    const auto result = ingest_graph6(in);
    CHECK(result.graphs == std::vector<Graph>{gen_complete(3), gen_path(4)});
  }
  CHECK_THROWS_AS(ingest_graph6(std::filesystem::path("/nonexistent/tdk.g6")), std::runtime_error);
}

TEST_CASE("find_critical examples") {
  const auto four = find_critical(connected_up_to(4));
  for (const auto& g : {gen_complete(1), gen_complete(2), gen_complete(3), gen_path(4), gen_complete(4)})
    CHECK(listed(four, g));
  std::map<int, int> by_k;
  for (const auto& entry : four.critical) ++by_k[entry.k];
  CHECK(by_k == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 1}});

  const auto five = find_critical(enumerate_connected(5));
  CHECK(listed(five, gen_cycle(5)));
  CHECK(listed(five, gen_complete(5)));

  std::vector<Graph> stars;
  for (int m = 2; m <= 10; ++m) {
    std::vector<Edge> edges;
    for (int v = 1; v <= m; ++v) edges.push_back({0, v});
    stars.push_back(Graph::build(m + 1, edges));
  }
  const auto none = find_critical(stars);
  CHECK(none.critical.empty());
  CHECK(none.graphs_scanned == 9);
}

TEST_CASE("report entries are sorted and deduplicated") {
  auto graphs = connected_up_to(5);
  graphs.push_back(relabel(gen_path(4), std::vector<int>{2, 0, 3, 1}));
  const auto report = find_critical(graphs);
  for (std::size_t i = 1; i < report.critical.size(); ++i) {
    const auto& a = report.critical[i - 1];
    const auto& b = report.critical[i];
    CHECK(std::tie(a.k, a.graph6) < std::tie(b.k, b.graph6));
  }
  for (const auto& entry : report.critical) {
    const auto g = parse_graph6(entry.graph6);
    CHECK(canonical_form(g) == g);
    CHECK(entry.order == g.order());
    CHECK(entry.max_degree == g.max_degree());
  }
}

TEST_CASE("verify_conjectures") {
  SUBCASE("clean up to six vertices") {
    auto report = find_critical(connected_up_to(6));
    verify_conjectures(report);
    CHECK(report.conjectures.verified);
    CHECK(report.conjectures.clean());
    for (const auto& entry : report.critical) CHECK(entry.one_unique == true);
  }
  SUBCASE("fake entry is rejected") {
    auto report = find_critical(connected_up_to(4));
    report.critical.push_back({2, emit_graph6(canonical_form(gen_path(3))), 3, 2, std::nullopt});
    CHECK_THROWS_AS(verify_conjectures(report), ScanValidationError);
    CHECK_FALSE(report.conjectures.verified);
  }
  SUBCASE("seven vertices") {
    auto report = find_critical(enumerate_connected(7));
    verify_conjectures(report);
    CHECK(report.conjectures.order_bound.empty());
    CHECK(report.conjectures.max_degree.empty());
    // Two 5-critical graphs on seven vertices are not 1-unique.
    CHECK(report.conjectures.one_unique == std::vector<std::string>{"F@U^?", "FKLkw"});
    for (const auto& code : report.conjectures.one_unique) {
      const auto g = parse_graph6(code);
      CHECK(is_critical(g).is_critical);
      CHECK_FALSE(is_one_unique(g, OneUniqueMethod::Oracle).one_unique);
    }
  }
}

TEST_CASE("verify_formulas") {
  const auto checks = verify_formulas(32, 33, 12);
  std::size_t paths = 0, cycles = 0, trees = 0;
  for (const auto& c : checks) {
    INFO(c.instance);
    CHECK(c.pass);
    CHECK(c.expected == c.computed);
    if (c.instance.starts_with("P")) ++paths;
    if (c.instance.starts_with("C")) ++cycles;
    if (c.instance.starts_with("critical-tree")) ++trees;
  }
  CHECK(paths == 32);
  CHECK(cycles == 31);
  CHECK(trees > 0);
}

TEST_CASE("critical trees have power-of-two order") {
  std::set<int> orders;
  for (int n = 1; n <= 12; ++n) {
    const auto report = find_critical(enumerate_trees(n));
    for (const auto& entry : report.critical) {
      CHECK(entry.order == 1 << (entry.k - 1));
      orders.insert(entry.order);
    }
  }
  CHECK(orders == std::set<int>{1, 2, 4, 8});
}

TEST_CASE("determinism across worker counts") {
  const auto outcome = props::scan_determinism(6, {1, 2, 3, 8});
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}

TEST_CASE("completeness against an independent recomputation") {
  const auto graphs = connected_up_to(7);
  const auto report = find_critical(graphs, 2);
  std::set<std::string> expected;
  for (const auto& g : graphs)
    if (naive_critical(g)) expected.insert(emit_graph6(canonical_form(g)));
  CHECK(critical_codes(report) == expected);
}

TEST_CASE("family instances of order at most seven are found") {
  const auto report = find_critical(connected_up_to(7));
  std::size_t present = 0;
  for (const auto& spec : family_instances(7)) {
    const auto g = generate(spec);
    if (g.order() > 7) continue;
    INFO(spec.name());
    CHECK(listed(report, g));
    ++present;
  }
  CHECK(present >= 10);
}

TEST_CASE("json report") {
  auto report = find_critical(connected_up_to(3));
  verify_conjectures(report);
  report.formulas = verify_formulas(3, 3, 1);
  const auto json = to_json(report);
  CHECK(json.find("\"critical\"") != std::string::npos);
  CHECK(json.find("\"conjectures\"") != std::string::npos);
  CHECK(json.find("\"formulas\"") != std::string::npos);
  CHECK(to_json(report) == json);
  CHECK_FALSE(report.has_failures());
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
  parallel_for(0, 4, [&](std::size_t) { CHECK(false); });
}

TEST_SUITE_END();
