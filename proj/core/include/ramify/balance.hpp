#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramify/map.hpp"
#include "ramify/matching.hpp"

namespace ramify {

/// A black-subset submap with more faces than black vertices.
struct SubmapWitness {
  std::vector<VertexId> black_vertices;
  SubmapStats stats;
};

/// A set of added dots whose admissible black vertices lack the capacity to
/// host them all.
struct HallWitness {
  std::vector<FaceId> faces;  ///< faces holding the violating dots
  int dots = 0;
  int capacity = 0;
};

struct BalanceReport {
  bool globally_balanced = false;
  bool locally_balanced = false;
  std::optional<SubmapWitness> submap_witness;
  std::optional<HallWitness> hall_witness;
  /// Which check settled a negative local verdict; empty when balanced.
  std::string reason;

  bool balanced() const { return globally_balanced && locally_balanced; }
};

/// Largest black-vertex count the subset enumeration accepts.
inline constexpr int kBruteForceBlackLimit = 20;
/// Largest face count strict_face_subset_check accepts.
inline constexpr int kFaceSubsetLimit = 20;

/// F_G == V_G, cross-checked against sum_w (deg w - 1) == 2 V_G - 2.
bool check_global(const BipartiteMap& map);

/// Tries every nonempty black subset in ascending cardinality and reports the
/// first submap with F_H > V_H.
BalanceReport check_local_bruteforce(const BipartiteMap& map);

/// Decides local balance of a globally balanced map through the completion
/// matching with n = W_G. Throws InputError when the map is not globally
/// balanced.
BalanceReport check_local_matching(const BipartiteMap& map);

/// For every proper nonempty set of faces, the black vertices incident to it
/// outnumber it.
bool strict_face_subset_check(const BipartiteMap& map);

/// The dots-to-black-vertices instance: each face f holds n - deg(f) dots
/// adjacent to the black vertices on f; black vertex number i (position in
/// black_vertices()) has capacity n - deg.
struct CompletionInstance {
  int regularity = 0;
  MatchingInstance instance;
  std::vector<FaceId> dot_face;
};

/// Requires every face and black degree to be at most W_G.
CompletionInstance completion_instance(const BipartiteMap& map);

/// Faces incident to each white vertex more than once, as (white, face) pairs.
std::vector<std::pair<VertexId, FaceId>> doubly_incident_whites(const BipartiteMap& map);

}  // namespace ramify
