#include "ramify/planarity.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "ramify/canonical.hpp"
#include "ramify/error.hpp"

namespace ramify {
namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                    boost::no_property,
                                    boost::property<boost::edge_index_t, int>>;
using EdgeDescriptor = boost::graph_traits<Graph>::edge_descriptor;

void require_connected(const BipartiteGraph& graph, const char* stage) {
  graph.validate();
  if (graph.edges.empty()) throw InputError(stage, "graph has no edges");
  if (!graph.connected()) throw InputError(stage, "graph is not connected");
}

// Darts at each white (2e) and each black (2e+1), in edge order.
std::pair<std::vector<std::vector<Dart>>, std::vector<std::vector<Dart>>> incident_darts(
    const BipartiteGraph& graph) {
  std::vector<std::vector<Dart>> white(graph.white_count);
  std::vector<std::vector<Dart>> black(graph.black_count);
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    white[graph.edges[e].white].push_back(2 * e);
    black[graph.edges[e].black].push_back(2 * e + 1);
  }
  return {std::move(white), std::move(black)};
}

std::vector<Dart> edge_involution(int edges) {
  std::vector<Dart> alpha(2 * edges);
  for (int e = 0; e < edges; ++e) {
    alpha[2 * e] = 2 * e + 1;
    alpha[2 * e + 1] = 2 * e;
  }
  return alpha;
}

int count_faces(const std::vector<Dart>& alpha, const std::vector<Dart>& sigma) {
  std::vector<bool> seen(alpha.size(), false);
  int faces = 0;
  for (std::size_t start = 0; start < alpha.size(); ++start) {
    if (seen[start]) continue;
    ++faces;
    for (Dart x = static_cast<Dart>(start); !seen[x]; x = sigma[alpha[x]]) seen[x] = true;
  }
  return faces;
}

}  // namespace

EmbeddingResult embed_planar(const BipartiteGraph& graph) {
  require_connected(graph, "embed_planar");
  const int m = graph.white_count;
  const int edges = static_cast<int>(graph.edges.size());

  // Whites are boost vertices 0..m-1, blacks follow; subdivision vertices last.
  Graph g(m + graph.black_count);
  std::vector<int> source_edge;
  auto connect = [&](int u, int v, int e) {
    const EdgeDescriptor ed = boost::add_edge(u, v, g).first;
    boost::put(boost::edge_index, g, ed, static_cast<int>(source_edge.size()));
    source_edge.push_back(e);
  };
  std::set<std::pair<int, int>> seen_pairs;
  for (int e = 0; e < edges; ++e) {
    const int w = graph.edges[e].white;
    const int b = m + graph.edges[e].black;
    if (seen_pairs.insert({w, b}).second) {
      connect(w, b, e);
    } else {
      const int mid = static_cast<int>(boost::add_vertex(g));
      connect(w, mid, e);
      connect(mid, b, e);
    }
  }

  std::vector<std::vector<EdgeDescriptor>> embedding(boost::num_vertices(g));
  std::vector<EdgeDescriptor> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, g)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  EmbeddingResult result;
  if (!planar) {
    for (const auto& ed : kuratowski) {
      result.obstruction.push_back(source_edge[boost::get(boost::edge_index, g, ed)]);
    }
    std::sort(result.obstruction.begin(), result.obstruction.end());
    result.obstruction.erase(std::unique(result.obstruction.begin(), result.obstruction.end()),
                             result.obstruction.end());
    return result;
  }

  std::vector<Dart> sigma(2 * edges, -1);
  for (int v = 0; v < m + graph.black_count; ++v) {
    const bool white = v < m;
    std::vector<Dart> order;
    for (const auto& ed : embedding[v]) {
      const int e = source_edge[boost::get(boost::edge_index, g, ed)];
      order.push_back(white ? 2 * e : 2 * e + 1);
    }
    for (std::size_t j = 0; j < order.size(); ++j) sigma[order[j]] = order[(j + 1) % order.size()];
  }
  if (std::count(sigma.begin(), sigma.end(), -1) != 0) {
    throw InvariantError("embed_planar", "embedding misses some edge ends");
  }

  RotationMap rot(edge_involution(edges), std::move(sigma));
  const auto [white_darts, black_darts] = incident_darts(graph);
  std::vector<Dart> black_reps;
  for (const auto& darts : black_darts) black_reps.push_back(darts.front());
  for (const auto& darts : white_darts) result.white_vertex.push_back(rot.vertex_of(darts.front()));
  for (const auto& darts : black_darts) result.black_vertex.push_back(rot.vertex_of(darts.front()));
  result.map.emplace(std::move(rot), black_reps);
  return result;
}

std::vector<BipartiteMap> brute_force_embeddings(const BipartiteGraph& graph, int limit) {
  require_connected(graph, "brute_force_embeddings");
  const int edges = static_cast<int>(graph.edges.size());
  enforce_guard("brute_force_embeddings", "edge count", edges, kBruteForceEmbeddingEdgeLimit);

  auto [white_darts, black_darts] = incident_darts(graph);
  std::vector<std::vector<Dart>> rotations;
  for (auto& darts : white_darts) rotations.push_back(std::move(darts));
  for (auto& darts : black_darts) rotations.push_back(std::move(darts));
  std::vector<Dart> black_reps;
  for (int b = 0; b < graph.black_count; ++b) black_reps.push_back(rotations[graph.white_count + b][0]);

  const std::vector<Dart> alpha = edge_involution(edges);
  const int vertices = static_cast<int>(rotations.size());
  std::vector<Dart> sigma(2 * edges);
  std::set<std::vector<int>> codes;
  std::vector<BipartiteMap> found;
  while (true) {
    for (const auto& order : rotations) {
      for (std::size_t j = 0; j < order.size(); ++j) sigma[order[j]] = order[(j + 1) % order.size()];
    }
    if (vertices - edges + count_faces(alpha, sigma) == 2) {
      BipartiteMap map(RotationMap(alpha, sigma), black_reps);
      if (codes.insert(canonical_code(map)).second) {
        found.push_back(std::move(map));
        if (limit > 0 && static_cast<int>(found.size()) >= limit) break;
      }
    }
    // Odometer over cyclic orders: the first dart of every vertex stays put.
    int v = 0;
    for (; v < vertices; ++v) {
      auto& order = rotations[v];
      if (order.size() > 2 && std::next_permutation(order.begin() + 1, order.end())) break;
    }
    if (v == vertices) break;
  }
  return found;
}

}  // namespace ramify
