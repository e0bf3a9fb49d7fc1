#include "treedepth/codec.hpp"

#include <json.hpp>

namespace tdk {

namespace {

constexpr int kBias = 63;

std::size_t graph6_body_length(int n) {
  const auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.empty()) throw ParseError("graph6: empty record");
  for (char c : record) {
    const auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126)
      throw ParseError("graph6: byte " + std::to_string(byte) + " outside 63..126");
  }
  const int n = static_cast<unsigned char>(record[0]) - kBias;
  if (n > Graph::kMaxVertices)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds " +
                     std::to_string(Graph::kMaxVertices));
  const auto expected = graph6_body_length(n);
  if (record.size() - 1 != expected)
    throw ParseError("graph6: expected " + std::to_string(expected + 1) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(record.size()));

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  auto next_bit = [&] {
    const int byte = static_cast<unsigned char>(record[1 + bit / 6]) - kBias;
    const bool set = (byte >> (5 - bit % 6)) & 1;
    ++bit;
    return set;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (next_bit()) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  while (bit < expected * 6)
    if (next_bit()) throw ParseError("graph6: nonzero padding bits");
  return Graph::from_adjacency(std::move(adj));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + kBias));
  int byte = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      byte = (byte << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(byte + kBias));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((byte << (6 - filled)) + kBias));
  return out;
}

std::string emit_dot(const Graph& g, const std::vector<int>* ranking, std::string_view name) {
  if (ranking && static_cast<int>(ranking->size()) != g.order())
    throw std::invalid_argument("ranking does not cover every vertex");
  std::string out = "graph \"" + std::string(name) + "\" {\n";
  for (int v = 0; v < g.order(); ++v) {
    const int label = ranking ? (*ranking)[v] : v;
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(label) + "\"];\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string emit_json(const GraphDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.graph.order();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : doc.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (doc.name) j["name"] = *doc.name;
  if (doc.ranking) j["ranking"] = *doc.ranking;
  return j.dump();
}

GraphDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("json: document must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("json: missing integer n");
  const int n = j["n"].get<int>();
  if (n < 0 || n > Graph::kMaxVertices)
    throw ParseError("json: n=" + std::to_string(n) + " outside 0.." +
                     std::to_string(Graph::kMaxVertices));

  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("json: edges must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError("json: each edge must be a pair of integers");
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("json: edge [" + std::to_string(u) + "," + std::to_string(v) +
                         "] out of range for n=" + std::to_string(n));
      if (u == v) throw ParseError("json: self-loop at " + std::to_string(u));
      edges.push_back({u, v});
    }
  }

  GraphDocument doc{Graph::build(n, edges), std::nullopt, std::nullopt};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("json: name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("ranking")) {
    const auto& r = j["ranking"];
    if (!r.is_array() || static_cast<int>(r.size()) != n)
      throw ParseError("json: ranking must be an array of n labels");
    std::vector<int> labels;
    for (const auto& x : r) {
      if (!x.is_number_integer() || x.get<int>() < 1)
        throw ParseError("json: ranking labels must be positive integers");
      labels.push_back(x.get<int>());
    }
    doc.ranking = std::move(labels);
  }
  return doc;
}

}  // namespace tdk
