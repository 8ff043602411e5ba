#pragma once

#include <vector>

namespace ramify {

/// A family of sets A_0..A_{left_count-1} over right elements that may be
/// used up to `capacity[r]` times each.
struct MatchingInstance {
  int left_count = 0;
  std::vector<int> capacity;
  std::vector<std::vector<int>> adjacency;

  int right_count() const { return static_cast<int>(capacity.size()); }
  /// Throws InputError on negative capacities or undeclared right elements.
  void validate() const;
};

struct Matching {
  std::vector<int> partner;  ///< right element matched to each left, or -1
  int size = 0;
};

/// Maximum capacitated matching, solved as a max flow in which lefts with
/// the same neighborhood share one node. Deterministic for a given instance.
Matching max_matching(const MatchingInstance& instance);

struct HallVerdict {
  bool perfect = false;
  Matching matching;
  /// When not perfect: left elements whose joint neighborhood has total
  /// capacity `violator_capacity` < violator.size().
  std::vector<int> violator;
  int violator_capacity = 0;
};

HallVerdict has_perfect_matching(const MatchingInstance& instance);

}  // namespace ramify
