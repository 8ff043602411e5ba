#include "ramify/graph.hpp"

#include <string>

#include "ramify/error.hpp"

namespace ramify {

void BipartiteGraph::validate() const {
  if (white_count < 0 || black_count < 0) throw InputError("graph", "negative vertex count");
  for (const auto& e : edges) {
    if (e.white < 0 || e.white >= white_count || e.black < 0 || e.black >= black_count) {
      throw InputError("graph", "edge (" + std::to_string(e.white) + "," +
                                    std::to_string(e.black) + ") names an undeclared vertex");
    }
  }
}

bool BipartiteGraph::connected() const {
  const int total = white_count + black_count;
  if (total == 0) return false;
  std::vector<std::vector<int>> adjacent(total);
  for (const auto& e : edges) {
    adjacent[e.white].push_back(white_count + e.black);
    adjacent[white_count + e.black].push_back(e.white);
  }
  std::vector<bool> seen(total, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adjacent[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == total;
}

BipartiteGraph underlying_graph(const BipartiteMap& map) {
  const RotationMap& rot = map.rotation();
  std::vector<int> index(rot.vertex_count(), -1);
  BipartiteGraph graph;
  for (VertexId w : map.white_vertices()) index[w] = graph.white_count++;
  for (VertexId v : map.black_vertices()) index[v] = graph.black_count++;
  for (Dart x = 0; x < rot.dart_count(); ++x) {
    if (map.is_black(x)) continue;
    graph.edges.push_back({index[rot.vertex_of(x)], index[rot.vertex_of(rot.alpha(x))]});
  }
  return graph;
}

}  // namespace ramify
