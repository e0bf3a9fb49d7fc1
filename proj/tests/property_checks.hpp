// Property suites shared by the standalone property test and the acceptance runner.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "treedepth/graph.hpp"

namespace tdk::props {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(std::string what) {
    if (failures++ == 0) first_failure = std::move(what);
  }
};

/// All graphs on 1..max_n vertices up to isomorphism (connected or not).
std::vector<Graph> all_graphs_up_to(int max_n);

/// Component-based ranking check vs. the all-simple-paths definition, every labelling
/// with labels 1..n of every graph up to max_n vertices.
Outcome ranking_equivalence_exhaustive(int max_n);
Outcome ranking_equivalence_random(std::size_t count, int max_n, unsigned seed);

Outcome graph6_round_trip(std::size_t count, int max_n, unsigned seed);

/// canonical_code unchanged under every permutation of every graph up to max_n vertices.
Outcome canonical_invariance_exhaustive(int max_n);
Outcome canonical_invariance_random(std::size_t count, int max_n, unsigned seed);

/// Certificates are valid rankings whose top label equals td.
Outcome certificate_soundness(const std::vector<Graph>& graphs);

/// Scan of all connected graphs up to max_n produces identical JSON for every worker count.
Outcome scan_determinism(int max_n, const std::vector<int>& jobs);

}  // namespace tdk::props
