#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ramify/graph.hpp"
#include "ramify/map.hpp"
#include "ramify/matrix.hpp"
#include "ramify/planarity.hpp"

namespace ramify::testing {

inline BipartiteMap single_edge() {
  const std::vector<Dart> blacks{0};
  return BipartiteMap(RotationMap({1, 0}, {0, 1}), blacks);
}

// Black center (dart 0) with k white leaves; edge e is darts 2e (black), 2e+1.
inline BipartiteMap star(int k) {
  std::vector<Dart> alpha(2 * k);
  std::vector<Dart> sigma(2 * k);
  for (int e = 0; e < k; ++e) {
    alpha[2 * e] = 2 * e + 1;
    alpha[2 * e + 1] = 2 * e;
    sigma[2 * e] = 2 * ((e + 1) % k);
    sigma[2 * e + 1] = 2 * e + 1;
  }
  const std::vector<Dart> blacks{0};
  return BipartiteMap(RotationMap(alpha, sigma), blacks);
}

// One black and one white joined by two edges.
inline BipartiteMap two_parallel_edges() {
  const std::vector<Dart> blacks{0};
  return BipartiteMap(RotationMap({1, 0, 3, 2}, {2, 3, 0, 1}), blacks);
}

// Uncolored n-gon: vertex v holds darts 2v and 2(v-1)+1.
inline RotationMap polygon(int n) {
  std::vector<Dart> alpha(2 * n);
  std::vector<Dart> sigma(2 * n);
  for (int i = 0; i < n; ++i) {
    alpha[2 * i] = 2 * i + 1;
    alpha[2 * i + 1] = 2 * i;
  }
  for (int v = 0; v < n; ++v) {
    const Dart out = 2 * v;
    const Dart in = 2 * ((v + n - 1) % n) + 1;
    sigma[out] = in;
    sigma[in] = out;
  }
  return RotationMap(alpha, sigma);
}

inline BipartiteMap embed(const BipartiteGraph& graph) {
  EmbeddingResult result = embed_planar(graph);
  return std::move(*result.map);
}

inline BipartiteMap from_rows(const std::vector<std::vector<int>>& rows) {
  return embed(matrix_to_graph(IncidenceMatrix::from_rows(rows)));
}

// 2 whites, 2 blacks, 4 edges in a cycle.
inline BipartiteMap quadrilateral() { return from_rows({{1, 1}, {1, 1}}); }

inline const std::vector<std::vector<int>>& all_twos_rows() {
  static const std::vector<std::vector<int>> rows{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1},
                                                  {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return rows;
}

inline const std::vector<std::vector<int>>& threes_and_twos_rows() {
  static const std::vector<std::vector<int>> rows{
      {1, 1, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return rows;
}

// Every ordering of every list (a_1..a_m), 2 <= a_i <= d, with sum (a_i - 1) = 2d - 2.
inline std::vector<RamificationDistribution> all_distributions(int d) {
  std::vector<RamificationDistribution> out;
  std::vector<int> current;
  auto extend = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back({d, current});
      return;
    }
    for (int a = 2; a <= d && a - 1 <= remaining; ++a) {
      current.push_back(a);
      self(self, remaining - (a - 1));
      current.pop_back();
    }
  };
  extend(extend, 2 * d - 2);
  return out;
}

}  // namespace ramify::testing
