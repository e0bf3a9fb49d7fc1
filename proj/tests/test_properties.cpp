#include <doctest.h>

#include "property_checks.hpp"
#include "treedepth/families.hpp"
#include "treedepth/scanner.hpp"

using namespace tdk;

TEST_SUITE_BEGIN("properties");

TEST_CASE("ranking check equals the all-paths definition, n <= 5 exhaustive") {
  const auto outcome = props::ranking_equivalence_exhaustive(5);
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
  MESSAGE(outcome.cases << " labelled graphs checked");
}

TEST_CASE("ranking check equals the all-paths definition, random n <= 7") {
  const auto outcome = props::ranking_equivalence_random(500, 7, 1);
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}

TEST_CASE("graph6 round trip, 1000 random graphs") {
  const auto outcome = props::graph6_round_trip(1000, 62, 2);
  INFO(outcome.first_failure);
  CHECK(outcome.cases == 1000);
  CHECK(outcome.ok());
}

TEST_CASE("canonical code is permutation invariant, n <= 6 exhaustive") {
  const auto outcome = props::canonical_invariance_exhaustive(6);
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}

TEST_CASE("canonical code is permutation invariant, random n <= 10") {
  const auto outcome = props::canonical_invariance_random(2000, 10, 3);
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}

TEST_CASE("certificates are optimal rankings") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 7; ++n) {
    auto level = enumerate_connected(n);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  for (const auto& spec : family_instances(6))
    if (auto g = generate(spec); g.order() <= 16) graphs.push_back(std::move(g));
  const auto outcome = props::certificate_soundness(graphs);
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}

TEST_CASE("scan output is identical for every worker count") {
  const auto outcome = props::scan_determinism(7, {1, 2, 4});
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}

TEST_SUITE_END();
