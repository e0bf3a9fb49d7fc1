#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treedepth/graph.hpp"

namespace tdk {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 short form (n <= 62). Throws ParseError on a malformed record.
Graph parse_graph6(std::string_view record);
std::string emit_graph6(const Graph& g);

/// Undirected DOT. With a ranking, each node is labelled by its rank.
std::string emit_dot(const Graph& g, const std::vector<int>* ranking = nullptr,
                     std::string_view name = "G");

/// {"n": int, "edges": [[u,v],...], "name": str?, "ranking": [int]?}
struct GraphDocument {
  Graph graph;
  std::optional<std::string> name;
  std::optional<std::vector<int>> ranking;
};

std::string emit_json(const GraphDocument& doc);
GraphDocument parse_json(std::string_view text);

}  // namespace tdk
