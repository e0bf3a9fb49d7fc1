#pragma once

#include <string>
#include <vector>

#include "treedepth/graph.hpp"

namespace tdk {

enum class FamilyKind { Complete, Path, Cycle, R, Q };

/// Parameters selecting one family instance. Unused fields stay zero.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  int k = 0;                   // complete, R, Q
  int n = 0;                   // path, cycle
  int t = 0;                   // R: pendant path length
  int s = 0;                   // Q: core clique size
  std::vector<int> partition;  // Q: parts of s, stored descending

  static FamilySpec complete(int k);
  static FamilySpec path(int n);
  static FamilySpec cycle(int n);
  static FamilySpec r(int k, int t);
  static FamilySpec q(int k, int s, std::vector<int> partition);

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
  /// Short display name such as "P8", "R(4,1)" or "Q(7,5;2,2,1)".
  std::string name() const;

  bool operator==(const FamilySpec&) const = default;
};

Graph gen_complete(int k);
Graph gen_path(int n);
Graph gen_cycle(int n);
/// Path 0..2^(k-2)+t plus the edge (t, 2^(k-2)); needs k >= 3, 0 <= t <= 2^(k-2)-2.
Graph gen_R(int k, int t);
/// Core K_s on 0..s-1 split into consecutive blocks B_i of the (descending) partition,
/// followed by cliques H_i of size k-s, each H_i completely joined to B_i.
Graph gen_Q(int k, int s, std::vector<int> partition);
Graph generate(const FamilySpec& spec);

int expected_treedepth(const FamilySpec& spec);

/// Integer partitions of s, each descending, in reverse lexicographic order.
std::vector<std::vector<int>> integer_partitions(int s);

/// Every K, P, C, R and Q instance whose declared tree-depth is in 1..k_max
/// (Q restricted to s < k; s = k is K_k). Instances above 62 vertices are left out.
std::vector<FamilySpec> family_instances(int k_max);

}  // namespace tdk
