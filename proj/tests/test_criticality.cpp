#include <doctest.h>

#include <stdexcept>

#include "treedepth/criticality.hpp"
#include "treedepth/families.hpp"
#include "treedepth/scanner.hpp"
#include "treedepth/solver.hpp"

using namespace tdk;

namespace {

bool isomorphic(const Graph& a, const Graph& b) { return canonical_code(a) == canonical_code(b); }

std::vector<Graph> connected_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_connected(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Graph k4_minus_edge() { return delete_edge(gen_complete(4), 0, 1); }

}  // namespace

TEST_SUITE_BEGIN("criticality");

TEST_CASE("one_step_minors") {
  CHECK(one_step_minors(gen_complete(3)).size() == 9);
  CHECK(one_step_minors(gen_complete(2)).size() == 4);
  const auto isolated = one_step_minors(Graph(2));
  REQUIRE(isolated.size() == 2);
  for (const auto& [step, minor] : isolated) CHECK(step.kind == MinorStep::Kind::DeleteVertex);

  const auto minors = one_step_minors(gen_path(3));
  REQUIRE(minors.size() == 3 + 2 + 2);
  CHECK(minors[0].first.kind == MinorStep::Kind::DeleteVertex);
  CHECK(minors[3].first.kind == MinorStep::Kind::ContractEdge);
  CHECK(minors[5].first.kind == MinorStep::Kind::DeleteEdge);
  for (const auto& [step, minor] : minors) CHECK(apply(gen_path(3), step) == minor);
}

TEST_CASE("is_critical examples") {
  const auto p8 = is_critical(gen_path(8));
  CHECK(p8.is_critical);
  CHECK(p8.td == 4);
  CHECK_FALSE(p8.witness.has_value());

  const auto c4 = gen_cycle(4);
  const auto verdict = is_critical(c4);
  CHECK_FALSE(verdict.is_critical);
  CHECK(verdict.td == 3);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->kind == MinorStep::Kind::ContractEdge);
  const auto witness_graph = apply(c4, *verdict.witness);
  CHECK(isomorphic(witness_graph, gen_complete(3)));
  CHECK(tree_depth(witness_graph).td == 3);

  const auto c5 = is_critical(gen_cycle(5));
  CHECK(c5.is_critical);
  CHECK(c5.td == 4);

  const auto diamond = is_critical(k4_minus_edge());
  CHECK_FALSE(diamond.is_critical);
  REQUIRE(diamond.witness.has_value());
  CHECK(tree_depth(apply(k4_minus_edge(), *diamond.witness)).td == 3);

  CHECK(is_critical(Graph(1)).is_critical);
  CHECK_FALSE(is_critical(Graph(2)).is_critical);
  CHECK_FALSE(is_critical(disjoint_union(gen_complete(3), gen_complete(2))).is_critical);
}

TEST_CASE("star-clique 1-uniqueness") {
  CHECK_FALSE(is_one_unique_vertex(gen_path(3), 1));
  CHECK(tree_depth(star_clique_transform(gen_path(3), 1)).td == 2);
  for (int v = 0; v < 5; ++v) {
    CHECK(tree_depth(star_clique_transform(gen_cycle(5), v)).td == 3);
    CHECK(is_one_unique_vertex(gen_cycle(5), v));
  }
  for (int v = 0; v < 4; ++v) CHECK(is_one_unique_vertex(gen_complete(4), v));
  CHECK_THROWS_AS(is_one_unique_vertex(gen_path(3), 3), std::out_of_range);
  CHECK_THROWS_AS(is_one_unique_vertex(gen_path(3), -1, OneUniqueMethod::Oracle), std::out_of_range);

  CHECK(is_one_unique(gen_R(4, 2)).one_unique);
  const auto p3 = is_one_unique(gen_path(3));
  CHECK_FALSE(p3.one_unique);
  // Neither end of P3 is 1-unique either: a lone 1 at an end forces the other two to share label 2.
  CHECK(p3.failing_vertex == 0);
  CHECK(p3.failing_vertices == std::vector<int>{0, 1, 2});
  CHECK(is_one_unique(gen_Q(7, 5, {2, 2, 1})).one_unique);
}

TEST_CASE("star-clique criterion matches the ranking oracle") {
  std::size_t disagreements = 0;
  std::size_t checked = 0;
  for (const auto& g : connected_up_to(7)) {
    for (int v = 0; v < g.order(); ++v) {
      ++checked;
      if (is_one_unique_vertex(g, v, OneUniqueMethod::StarClique) !=
          is_one_unique_vertex(g, v, OneUniqueMethod::Oracle))
        ++disagreements;
    }
  }
  CHECK(checked > 0);
  CHECK(disagreements == 0);
}

TEST_CASE("edge-deletion criterion for 1-unique graphs") {
  std::size_t applicable = 0;
  for (const auto& g : connected_up_to(7)) {
    if (!is_one_unique(g).one_unique) continue;
    const int td = tree_depth(g).td;
    bool all_drop = true;
    for (const auto& [u, v] : g.edges()) all_drop = all_drop && tree_depth_below(delete_edge(g, u, v), td);
    if (!all_drop) continue;
    ++applicable;
    CHECK(is_critical(g).is_critical);
  }
  CHECK(applicable > 0);
}

TEST_CASE("edge_join") {
  CHECK(edge_join(Graph(1), Graph(1), 0, 0) == gen_complete(2));
  CHECK(edge_join(gen_path(4), gen_path(4), 3, 0) == gen_path(8));
  const auto kk = edge_join(gen_complete(3), gen_complete(3), 2, 1);
  CHECK(kk.order() == 6);
  CHECK(tree_depth(kk).td == 4);
  CHECK(is_critical(kk).is_critical);
  CHECK_THROWS_AS(edge_join(gen_path(2), gen_path(2), 2, 0), std::out_of_range);
  CHECK_THROWS_AS(edge_join(gen_path(2), gen_path(2), 0, 2), std::out_of_range);

  SUBCASE("joined critical pairs gain one level") {
    for (int t = 1; t <= 3; ++t) {
      std::vector<Graph> pool{gen_complete(t), gen_path(1 << (t - 1))};
      if (t >= 3) pool.push_back(gen_cycle((1 << (t - 2)) + 1));
      for (const auto& g : pool) {
        for (const auto& h : pool) {
          for (int u = 0; u < g.order(); ++u) {
            for (int v = 0; v < h.order(); ++v) {
              const auto verdict = is_critical(edge_join(g, h, u, v));
              CHECK(verdict.is_critical);
              CHECK(verdict.td == t + 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("check_conjectures") {
  for (const auto& g : {gen_complete(4), gen_cycle(5), gen_path(8)}) {
    const auto verdict = check_conjectures(g);
    CHECK(verdict.k == 4);
    CHECK(verdict.order_bound);
    CHECK(verdict.max_degree);
    CHECK(verdict.one_unique);
    CHECK(verdict.all());
  }
  const auto p3 = check_conjectures(gen_path(3));
  CHECK_FALSE(p3.order_bound);
  CHECK_FALSE(p3.one_unique);
}

TEST_SUITE_END();
