#pragma once

#include <functional>
#include <vector>

#include "ramify/map.hpp"

namespace ramify {

/// Largest edge count enumerate_maps accepts.
inline constexpr int kEnumerationEdgeLimit = 8;

struct EnumerationOptions {
  int max_edges = 0;
  bool balanced_only = false;
};

/// Number of maps per edge count: index e counts maps with e edges.
struct EnumerationCounts {
  std::vector<long> total;
  std::vector<long> emitted;
};

/// Every connected genus-0 bipartite map with 1..max_edges edges, one per
/// color- and orientation-preserving isomorphism class, in canonical form.
/// Maps are produced by edge count, then by canonical code. Balance is judged
/// by check_global plus the matching test.
EnumerationCounts enumerate_maps(const EnumerationOptions& options,
                                 const std::function<void(const BipartiteMap&)>& emit);

/// Convenience wrapper collecting the emitted maps.
std::vector<BipartiteMap> enumerate_maps(const EnumerationOptions& options);

/// Maps with exactly `edges` edges, built from the (edges-1)-edge level.
std::vector<BipartiteMap> grow_level(const std::vector<BipartiteMap>& previous);

/// Verdict used by the balanced-only filter.
bool is_balanced(const BipartiteMap& map);

}  // namespace ramify
