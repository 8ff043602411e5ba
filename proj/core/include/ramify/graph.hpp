#pragma once

#include <vector>

#include "ramify/map.hpp"

namespace ramify {

struct GraphEdge {
  int white = 0;
  int black = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

/// A bipartite multigraph without an embedding. Whites are 0..white_count-1,
/// blacks 0..black_count-1; parallel edges are listed repeatedly.
struct BipartiteGraph {
  int white_count = 0;
  int black_count = 0;
  std::vector<GraphEdge> edges;

  /// Throws InputError on an edge naming an undeclared vertex.
  void validate() const;
  /// True when there is at least one vertex and every vertex is reachable.
  bool connected() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Forgets the embedding. Whites and blacks are numbered in the order of
/// white_vertices() / black_vertices(); edge e joins the tips of the dart pair
/// whose white dart is the e-th smallest white dart.
BipartiteGraph underlying_graph(const BipartiteMap& map);

}  // namespace ramify
