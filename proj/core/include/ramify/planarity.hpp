#pragma once

#include <optional>
#include <vector>

#include "ramify/graph.hpp"
#include "ramify/map.hpp"

namespace ramify {

/// Outcome of embed_planar. Darts of an embedding follow the input edge list:
/// dart 2e sits at the white end of edge e and dart 2e+1 at its black end.
struct EmbeddingResult {
  std::optional<BipartiteMap> map;
  /// Map vertex of each graph white / black (empty when non-planar).
  std::vector<VertexId> white_vertex;
  std::vector<VertexId> black_vertex;
  /// Input edge indices of a Kuratowski subgraph when non-planar.
  std::vector<int> obstruction;

  bool planar() const { return map.has_value(); }
};

/// Edge-addition planarity test with embedding extraction. Parallel edges
/// are subdivided for the test and merged back into the embedding. Throws
/// InputError when the graph has no edges or is disconnected.
EmbeddingResult embed_planar(const BipartiteGraph& graph);

/// Largest edge count brute_force_embeddings accepts.
inline constexpr int kBruteForceEmbeddingEdgeLimit = 8;

/// Every genus-0 rotation system of the graph, one per isomorphism class of
/// the resulting bipartite map, in order of discovery. `limit` caps the number
/// of classes returned (0 means no cap). Same dart numbering as embed_planar.
std::vector<BipartiteMap> brute_force_embeddings(const BipartiteGraph& graph, int limit = 0);

}  // namespace ramify
