// tdk: exact tree-depth, criticality and 1-uniqueness from the command line.
//
// Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "treedepth/codec.hpp"
#include "treedepth/criticality.hpp"
#include "treedepth/families.hpp"
#include "treedepth/scanner.hpp"
#include "treedepth/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (!line.empty()) return line;
  }
  return {};
}

tdk::GraphDocument parse_text(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return tdk::parse_json(text);
  return {tdk::parse_graph6(first_line(text)), std::nullopt, std::nullopt};
}

// "-" is stdin, a leading '{' is inline JSON, an existing path is a file,
// anything else an inline graph6 record.
tdk::GraphDocument load_graph(const std::string& arg) {
  if (arg == "-") return parse_text(read_all(std::cin));
  if (!arg.empty() && arg.front() == '{') return tdk::parse_json(arg);
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read " + arg);
    return parse_text(read_all(in));
  }
  return {tdk::parse_graph6(arg), std::nullopt, std::nullopt};
}

tdk::Ranking load_ranking(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    text = read_all(in);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw tdk::ParseError(std::string("ranking: ") + e.what());
  }
  if (j.is_object() && j.contains("ranking")) j = j["ranking"];
  if (!j.is_array()) throw tdk::ParseError("ranking: expected a JSON array of labels");
  tdk::Ranking r;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw tdk::ParseError("ranking: labels must be integers");
    r.labels.push_back(x.get<int>());
  }
  return r;
}

std::string to_json_array(const std::vector<int>& values) { return nlohmann::json(values).dump(); }

int clamp_bound(int value, int cap, const std::string& flag) {
  if (value > cap) {
    std::cerr << "warning: " << flag << " " << value << " exceeds the practical bound; using "
              << cap << "\n";
    return cap;
  }
  return value;
}

int run_td(const std::string& input, bool certificate, const std::string& method) {
  const auto doc = load_graph(input);
  const auto result = tdk::tree_depth(doc.graph);
  int td = result.td;
  if (method == "separator") {
    td = tdk::tree_depth_via_separators(doc.graph).td;
    if (td != result.td) {
      std::cerr << "error: separator formula gave " << td << ", recursion gave " << result.td
                << "\n";
      return kFalse;
    }
  }
  std::cout << td << "\n";
  if (certificate) std::cout << to_json_array(result.certificate.labels) << "\n";
  return kOk;
}

int run_check_ranking(const std::string& graph, const std::string& ranking) {
  const auto doc = load_graph(graph);
  const auto r = load_ranking(ranking);
  tdk::RankingCheck check;
  try {
    check = tdk::check_ranking(doc.graph, r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (check.valid) {
    std::cout << "valid " << r.k() << "-ranking\n";
    return kOk;
  }
  std::cout << "invalid: path " << to_json_array(check.violating_path) << " joins two vertices labelled "
            << r.labels[check.violating_path.front()] << " with no higher label between\n";
  return kFalse;
}

int run_check_critical(const std::string& graph) {
  const auto doc = load_graph(graph);
  if (doc.graph.order() == 0) throw UsageError("criticality needs at least one vertex");
  const auto verdict = tdk::is_critical(doc.graph);
  if (verdict.is_critical) {
    std::cout << "critical td=" << verdict.td << "\n";
    return kOk;
  }
  const auto minor = tdk::apply(doc.graph, *verdict.witness);
  std::cout << "not critical td=" << verdict.td << " witness=" << tdk::to_string(*verdict.witness)
            << " minor=" << tdk::emit_graph6(minor) << " minor_td=" << tdk::tree_depth(minor).td
            << "\n";
  return kFalse;
}

int run_check_one_unique(const std::string& graph, std::optional<int> vertex,
                         const std::string& method_name) {
  const auto doc = load_graph(graph);
  const auto method =
      method_name == "oracle" ? tdk::OneUniqueMethod::Oracle : tdk::OneUniqueMethod::StarClique;
  if (vertex) {
    if (*vertex < 0 || *vertex >= doc.graph.order())
      throw UsageError("vertex " + std::to_string(*vertex) + " out of range");
    const bool ok = tdk::is_one_unique_vertex(doc.graph, *vertex, method);
    std::cout << "vertex " << *vertex << (ok ? " is 1-unique\n" : " is not 1-unique\n");
    return ok ? kOk : kFalse;
  }
  const auto verdict = tdk::is_one_unique(doc.graph, method);
  if (verdict.one_unique) {
    std::cout << "1-unique\n";
    return kOk;
  }
  std::cout << "not 1-unique: vertices";
  for (int v : verdict.failing_vertices) std::cout << ' ' << v;
  std::cout << "\n";
  return kFalse;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": expected an integer, got '" + text + "'");
}

tdk::FamilySpec parse_family(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("gen: missing family (complete, path, cycle, R, Q)");
  const std::string& kind = args[0];
  auto need = [&](std::size_t count) {
    if (args.size() != count + 1)
      throw UsageError("gen " + kind + ": expected " + std::to_string(count) + " parameter(s)");
  };
  if (kind == "complete" || kind == "K") {
    need(1);
    return tdk::FamilySpec::complete(parse_int(args[1], "k"));
  }
  if (kind == "path" || kind == "P") {
    need(1);
    return tdk::FamilySpec::path(parse_int(args[1], "n"));
  }
  if (kind == "cycle" || kind == "C") {
    need(1);
    return tdk::FamilySpec::cycle(parse_int(args[1], "n"));
  }
  if (kind == "R") {
    need(2);
    return tdk::FamilySpec::r(parse_int(args[1], "k"), parse_int(args[2], "t"));
  }
  if (kind == "Q") {
    need(3);
    std::vector<int> parts;
    std::stringstream ss(args[3]);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(parse_int(item, "part"));
    return tdk::FamilySpec::q(parse_int(args[1], "k"), parse_int(args[2], "s"), std::move(parts));
  }
  throw UsageError("gen: unknown family '" + kind + "'");
}

int run_gen(const std::vector<std::string>& args, const std::string& format) {
  const auto spec = parse_family(args);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("gen: ") + e.what());
  }
  const auto g = tdk::generate(spec);
  if (format == "dot")
    std::cout << tdk::emit_dot(g, nullptr, spec.name());
  else if (format == "json")
    std::cout << tdk::emit_json({g, spec.name(), std::nullopt}) << "\n";
  else
    std::cout << tdk::emit_graph6(g) << "\n";
  return kOk;
}

int run_scan(std::optional<int> max_n, const std::string& input, int jobs, const std::string& out) {
  tdk::ScanReport report;
  std::vector<tdk::Diagnostic> diagnostics;
  std::vector<tdk::Graph> graphs;
  if (input.empty()) {
    const int n_max = max_n.value_or(tdk::kMaxEnumerationOrder);
    if (n_max < 1 || n_max > tdk::kMaxEnumerationOrder)
      throw UsageError("scan: --max-n must be in 1.." + std::to_string(tdk::kMaxEnumerationOrder) +
                       " without --input");
    for (int n = 1; n <= n_max; ++n) {
      auto level = tdk::enumerate_connected(n);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
  } else {
    auto ingested = tdk::ingest_graph6(std::filesystem::path(input));
    for (auto& g : ingested.graphs)
      if (!max_n || g.order() <= *max_n) graphs.push_back(std::move(g));
    diagnostics = std::move(ingested.diagnostics);
  }

  report = tdk::find_critical(graphs, jobs);
  if (input.empty()) report.n_min = 1;
  report.source = input.empty() ? "internal" : "file";
  report.diagnostics = std::move(diagnostics);
  tdk::verify_conjectures(report, jobs);
  report.formulas = tdk::verify_formulas(32, 33, std::min(report.n_max, 12));

  const auto text = tdk::to_json(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) throw UsageError("cannot write " + out);
    file << text;
  }
  for (const auto& d : report.diagnostics)
    std::cerr << input << ":" << d.line << ": " << d.message << "\n";
  std::cerr << "scanned " << report.graphs_scanned << " graphs, " << report.critical.size()
            << " critical, " << (report.has_failures() ? "FAILURES FOUND" : "no counterexamples")
            << "\n";
  return report.has_failures() ? kFalse : kOk;
}

int run_verify(int paths, int cycles, int families, int trees) {
  paths = clamp_bound(paths, tdk::Graph::kMaxVertices, "--paths");
  cycles = clamp_bound(cycles, tdk::Graph::kMaxVertices, "--cycles");
  families = clamp_bound(families, 6, "--families");
  trees = clamp_bound(trees, 14, "--trees");

  bool all = true;
  for (const auto& row : tdk::verify_formulas(paths, cycles, trees)) {
    all = all && row.pass;
    std::cout << (row.pass ? "PASS  " : "FAIL  ") << row.instance << "  expected=" << row.expected
              << " computed=" << row.computed << "\n";
  }
  for (const auto& spec : tdk::family_instances(families)) {
    const auto g = tdk::generate(spec);
    const int td = tdk::tree_depth(g).td;
    const auto crit = tdk::is_critical(g);
    const bool unique = tdk::is_one_unique(g).one_unique;
    const bool pass = td == tdk::expected_treedepth(spec) && crit.is_critical && unique;
    all = all && pass;
    std::cout << (pass ? "PASS  " : "FAIL  ") << spec.name() << "  td=" << td
              << " expected=" << tdk::expected_treedepth(spec)
              << " critical=" << (crit.is_critical ? "yes" : "no")
              << " one-unique=" << (unique ? "yes" : "no") << "\n";
  }
  std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tree-depth, criticality and 1-uniqueness toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string method = "recurse";
  bool certificate = false;
  auto* td = app.add_subcommand("td", "Exact tree-depth of a graph");
  td->add_option("input", input, "graph6 string, JSON document, file path, or - for stdin")->required();
  td->add_flag("--certificate", certificate, "Also print an optimal ranking as JSON");
  td->add_option("--method", method, "recurse or separator")
      ->check(CLI::IsMember({"recurse", "separator"}));

  auto* check = app.add_subcommand("check", "Check a ranking, criticality or 1-uniqueness");
  check->require_subcommand(1);
  std::string ranking;
  auto* check_ranking = check->add_subcommand("ranking", "Validate a ranking");
  check_ranking->add_option("graph", input)->required();
  check_ranking->add_option("ranking", ranking, "JSON array, or a JSON document with \"ranking\"")
      ->required();
  auto* check_critical = check->add_subcommand("critical", "Decide criticality");
  check_critical->add_option("graph", input)->required();
  auto* check_unique = check->add_subcommand("one-unique", "Decide 1-uniqueness");
  check_unique->add_option("graph", input)->required();
  std::optional<int> vertex;
  std::string unique_method = "star-clique";
  check_unique->add_option("--vertex", vertex, "Check a single vertex");
  check_unique->add_option("--method", unique_method, "star-clique or oracle")
      ->check(CLI::IsMember({"star-clique", "oracle"}));

  std::vector<std::string> family;
  std::string format = "g6";
  auto* gen = app.add_subcommand("gen", "Generate a family instance");
  gen->add_option("family", family,
                  "complete k | path n | cycle n | R k t | Q k s p1,p2,...")
      ->required()
      ->expected(1, 4);
  gen->add_option("--format", format, "g6, dot or json")->check(CLI::IsMember({"g6", "dot", "json"}));

  std::optional<int> max_n;
  std::string scan_input;
  std::string scan_out;
  int jobs = 1;
  auto* scan = app.add_subcommand("scan", "Find critical graphs and test the conjectures");
  scan->add_option("--max-n", max_n, "Largest order (internal enumeration: at most 7)");
  scan->add_option("--input", scan_input, "graph6 file to scan instead of enumerating");
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", scan_out, "Write the JSON report here instead of stdout");

  int paths = 32;
  int cycles = 33;
  int families = 5;
  int trees = 12;
  auto* verify = app.add_subcommand("verify", "Reproduce the formula and family checks");
  verify->add_option("--paths", paths, "Check paths P1..PN");
  verify->add_option("--cycles", cycles, "Check cycles C3..CN");
  verify->add_option("--families", families, "Check family instances with tree-depth up to K");
  verify->add_option("--trees", trees, "Check critical trees up to N vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*td) return run_td(input, certificate, method);
    if (*check_ranking) return run_check_ranking(input, ranking);
    if (*check_critical) return run_check_critical(input);
    if (*check_unique) return run_check_one_unique(input, vertex, unique_method);
    if (*gen) return run_gen(family, format);
    if (*scan) return run_scan(max_n, scan_input, jobs, scan_out);
    if (*verify) return run_verify(paths, cycles, families, trees);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tdk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
