#include "treedepth/families.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tdk {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

int floor_log2(int x) { return std::bit_width(static_cast<unsigned>(x)) - 1; }

}  // namespace

FamilySpec FamilySpec::complete(int k) { return {FamilyKind::Complete, k, 0, 0, 0, {}}; }
FamilySpec FamilySpec::path(int n) { return {FamilyKind::Path, 0, n, 0, 0, {}}; }
FamilySpec FamilySpec::cycle(int n) { return {FamilyKind::Cycle, 0, n, 0, 0, {}}; }
FamilySpec FamilySpec::r(int k, int t) { return {FamilyKind::R, k, 0, t, 0, {}}; }

FamilySpec FamilySpec::q(int k, int s, std::vector<int> partition) {
  std::sort(partition.begin(), partition.end(), std::greater<>());
  return {FamilyKind::Q, k, 0, 0, s, std::move(partition)};
}

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::Complete:
      require(k >= 1, "complete graph needs k >= 1");
      require(k <= Graph::kMaxVertices, "complete graph order exceeds 62");
      break;
    case FamilyKind::Path:
      require(n >= 1, "path needs n >= 1");
      require(n <= Graph::kMaxVertices, "path order exceeds 62");
      break;
    case FamilyKind::Cycle:
      require(n >= 3, "cycle needs n >= 3");
      require(n <= Graph::kMaxVertices, "cycle order exceeds 62");
      break;
    case FamilyKind::R: {
      require(k >= 3, "R(k,t) needs k >= 3");
      require(k <= 7, "R(k,t) order exceeds 62 for k > 7");
      const int t_max = (1 << (k - 2)) - 2;
      require(t >= 0 && t <= t_max, "R(k,t) needs 0 <= t <= 2^(k-2)-2 = " +
                                        std::to_string(t_max) + ", got t=" + std::to_string(t));
      require((1 << (k - 2)) + 1 + t <= Graph::kMaxVertices, "R(k,t) order exceeds 62");
      break;
    }
    case FamilyKind::Q: {
      require(k >= 1, "Q(k,s) needs k >= 1");
      require(s >= 1 && s <= k, "Q(k,s) needs 1 <= s <= k");
      require(!partition.empty() && static_cast<int>(partition.size()) <= s,
              "Q(k,s) partition needs between 1 and s parts");
      require(std::all_of(partition.begin(), partition.end(), [](int p) { return p >= 1; }),
              "Q(k,s) partition parts must be positive");
      require(std::accumulate(partition.begin(), partition.end(), 0) == s,
              "Q(k,s) partition must sum to s");
      const int q = static_cast<int>(partition.size());
      require(s + q * (k - s) <= Graph::kMaxVertices, "Q(k,s) order exceeds 62");
      break;
    }
  }
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::Complete:
      return "K" + std::to_string(k);
    case FamilyKind::Path:
      return "P" + std::to_string(n);
    case FamilyKind::Cycle:
      return "C" + std::to_string(n);
    case FamilyKind::R:
      return "R(" + std::to_string(k) + "," + std::to_string(t) + ")";
    case FamilyKind::Q: {
      std::string parts;
      for (int p : partition) parts += (parts.empty() ? "" : ",") + std::to_string(p);
      return "Q(" + std::to_string(k) + "," + std::to_string(s) + ";" + parts + ")";
    }
  }
  return {};
}

Graph gen_complete(int k) {
  FamilySpec::complete(k).validate();
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  return Graph::build(k, edges);
}

Graph gen_path(int n) {
  FamilySpec::path(n).validate();
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::build(n, edges);
}

Graph gen_cycle(int n) {
  FamilySpec::cycle(n).validate();
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n - 1, 0});
  return Graph::build(n, edges);
}

Graph gen_R(int k, int t) {
  FamilySpec::r(k, t).validate();
  const int far = 1 << (k - 2);
  const int n = far + 1 + t;
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({t, far});
  return Graph::build(n, edges);
}

Graph gen_Q(int k, int s, std::vector<int> partition) {
  const auto spec = FamilySpec::q(k, s, std::move(partition));
  spec.validate();
  const int outer = k - s;
  const int n = s + static_cast<int>(spec.partition.size()) * outer;
  std::vector<Edge> edges;
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) edges.push_back({u, v});

  int core = 0;
  int next = s;
  for (int part : spec.partition) {
    const int block = next;
    for (int u = block; u < block + outer; ++u) {
      for (int v = u + 1; v < block + outer; ++v) edges.push_back({u, v});
      for (int b = core; b < core + part; ++b) edges.push_back({b, u});
    }
    core += part;
    next += outer;
  }
  return Graph::build(n, edges);
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Complete:
      return gen_complete(spec.k);
    case FamilyKind::Path:
      return gen_path(spec.n);
    case FamilyKind::Cycle:
      return gen_cycle(spec.n);
    case FamilyKind::R:
      return gen_R(spec.k, spec.t);
    case FamilyKind::Q:
      return gen_Q(spec.k, spec.s, spec.partition);
  }
  throw std::logic_error("unknown family kind");
}

int expected_treedepth(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::Path:
      return floor_log2(spec.n) + 1;
    case FamilyKind::Cycle:
      return floor_log2(spec.n - 1) + 2;
    case FamilyKind::Complete:
    case FamilyKind::R:
    case FamilyKind::Q:
      return spec.k;
  }
  throw std::logic_error("unknown family kind");
}

std::vector<std::vector<int>> integer_partitions(int s) {
  std::vector<std::vector<int>> out;
  if (s < 1) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, s, s);
  return out;
}

std::vector<FamilySpec> family_instances(int k_max) {
  std::vector<FamilySpec> out;
  for (int k = 1; k <= k_max; ++k) {
    out.push_back(FamilySpec::complete(k));
    if ((1 << (k - 1)) <= Graph::kMaxVertices) out.push_back(FamilySpec::path(1 << (k - 1)));
    if (k >= 3) {
      const int m = (1 << (k - 2)) + 1;
      if (m <= Graph::kMaxVertices) out.push_back(FamilySpec::cycle(m));
      for (int t = 1; t <= m - 3 && m + t <= Graph::kMaxVertices; ++t) out.push_back(FamilySpec::r(k, t));
    }
    for (int s = 1; s < k; ++s)
      for (auto& partition : integer_partitions(s))
        out.push_back(FamilySpec::q(k, s, std::move(partition)));
  }
  return out;
}

}  // namespace tdk
