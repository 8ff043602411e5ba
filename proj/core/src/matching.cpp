#include "ramify/matching.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "ramify/error.hpp"

namespace ramify {
namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS,
    boost::property<boost::vertex_color_t, boost::default_color_type>,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using Edge = boost::graph_traits<FlowGraph>::edge_descriptor;

// Lefts with equal neighborhoods are interchangeable, so they share one flow
// node whose supply is their number. Vertices: source, sink, classes, rights.
struct FlowResult {
  Matching matching;
  /// Lefts on the source side of the minimum cut.
  std::vector<int> source_side;
};

FlowResult solve(const MatchingInstance& instance) {
  instance.validate();
  std::map<std::vector<int>, int> class_of;
  std::vector<std::vector<int>> members;
  std::vector<std::vector<int>> neighbors;
  for (int l = 0; l < instance.left_count; ++l) {
    std::vector<int> rights = instance.adjacency[l];
    std::sort(rights.begin(), rights.end());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
    const auto [it, fresh] = class_of.emplace(rights, static_cast<int>(members.size()));
    if (fresh) {
      members.emplace_back();
      neighbors.push_back(rights);
    }
    members[it->second].push_back(l);
  }

  const int classes = static_cast<int>(members.size());
  const int source = 0;
  const int sink = 1;
  auto class_node = [](int c) { return 2 + c; };
  auto right_node = [&](int r) { return 2 + classes + r; };
  FlowGraph g(2 + classes + instance.right_count());
  auto capacity = boost::get(boost::edge_capacity, g);
  auto reverse = boost::get(boost::edge_reverse, g);
  auto residual = boost::get(boost::edge_residual_capacity, g);
  auto add = [&](int u, int v, long cap) {
    const Edge e = boost::add_edge(u, v, g).first;
    const Edge back = boost::add_edge(v, u, g).first;
    capacity[e] = cap;
    capacity[back] = 0;
    reverse[e] = back;
    reverse[back] = e;
    return e;
  };
  std::vector<std::vector<Edge>> class_edges(classes);
  for (int c = 0; c < classes; ++c) {
    add(source, class_node(c), static_cast<long>(members[c].size()));
    for (int r : neighbors[c]) class_edges[c].push_back(add(class_node(c), right_node(r), instance.left_count));
  }
  for (int r = 0; r < instance.right_count(); ++r) add(right_node(r), sink, instance.capacity[r]);

  FlowResult result;
  result.matching.size = static_cast<int>(boost::edmonds_karp_max_flow(
      g, source, sink, boost::color_map(boost::get(boost::vertex_color, g))));

  // Hand out each class's flow to its members in ascending order.
  result.matching.partner.assign(instance.left_count, -1);
  for (int c = 0; c < classes; ++c) {
    std::size_t next = 0;
    for (std::size_t k = 0; k < neighbors[c].size(); ++k) {
      const Edge e = class_edges[c][k];
      for (long f = capacity[e] - residual[e]; f > 0; --f) result.matching.partner[members[c][next++]] = neighbors[c][k];
    }
  }

  // The final search of the algorithm colors every vertex it reaches from
  // the source; white ones lie past the minimum cut.
  auto color = boost::get(boost::vertex_color, g);
  using Color = boost::color_traits<boost::default_color_type>;
  for (int c = 0; c < classes; ++c) {
    if (color[class_node(c)] != Color::white()) {
      result.source_side.insert(result.source_side.end(), members[c].begin(), members[c].end());
    }
  }
  std::sort(result.source_side.begin(), result.source_side.end());
  return result;
}

}  // namespace

void MatchingInstance::validate() const {
  if (left_count < 0 || static_cast<int>(adjacency.size()) != left_count) {
    throw InputError("matching", "adjacency must list exactly left_count sets");
  }
  for (int c : capacity) {
    if (c < 0) throw InputError("matching", "negative capacity " + std::to_string(c));
  }
  for (const auto& set : adjacency) {
    for (int r : set) {
      if (r < 0 || r >= right_count()) {
        throw InputError("matching", "undeclared right element " + std::to_string(r));
      }
    }
  }
}

Matching max_matching(const MatchingInstance& instance) { return solve(instance).matching; }

HallVerdict has_perfect_matching(const MatchingInstance& instance) {
  FlowResult flow = solve(instance);
  HallVerdict verdict;
  verdict.perfect = flow.matching.size == instance.left_count;
  verdict.matching = std::move(flow.matching);
  if (verdict.perfect) return verdict;

  // Source-side lefts: their neighbors are all reached and saturated, and
  // the cut is smaller than left_count, so they outnumber that capacity.
  verdict.violator = std::move(flow.source_side);
  std::vector<bool> in_neighborhood(instance.right_count(), false);
  for (int l : verdict.violator) {
    for (int r : instance.adjacency[l]) in_neighborhood[r] = true;
  }
  for (int r = 0; r < instance.right_count(); ++r) {
    if (in_neighborhood[r]) verdict.violator_capacity += instance.capacity[r];
  }
  if (verdict.violator_capacity >= static_cast<int>(verdict.violator.size())) {
    throw InvariantError("matching", "minimum cut does not give a Hall violator");
  }
  return verdict;
}

}  // namespace ramify
