#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramify/graph.hpp"
#include "ramify/map.hpp"
#include "ramify/matrix.hpp"
#include "ramify/permutation.hpp"

namespace ramify {

/// A balanced map completed with 1-valent whites so that every black vertex
/// and every face has degree n. Darts below original_dart_count are those of
/// the input map, unchanged.
struct RegularSkeleton {
  BipartiteMap map;
  int n = 0;
  int original_dart_count = 0;
};

/// An increasing map: d black vertices and d faces, all of degree n, whites
/// labeled 1..n so that labels go up by one counterclockwise around every
/// black vertex and every face sees each label once.
struct Representation {
  BipartiteMap map;
  int label_count = 0;
  /// Indexed by VertexId; 0 on black vertices.
  std::vector<int> labels;
  VertexId base_white = 0;
  /// Darts at or above this index are the 1-valent whites added by completion.
  int original_dart_count = 0;

  int degree() const { return map.black_count(); }
};

/// Permutations of the d faces (sheets) around each label, ascending.
struct MonodromyWitness {
  int degree = 0;
  std::vector<Permutation> permutations;
  /// Cycle type of each permutation, padded with 1s; trivial ones included.
  std::vector<Partition> partitions;
};

/// Composition order under which the monodromy product is the identity.
/// Ascending (sigma_1 acting first) fails on faces walked counterclockwise,
/// so the product is sigma_1 ∘ sigma_2 ∘ ... ∘ sigma_n with sigma_n first.
inline constexpr bool kMonodromyAscending = false;

/// Adds n - deg(f) leaves in each face f, attached to black vertices picked by
/// a perfect matching, n = W_G. Throws InputError unless the map is balanced
/// and InvariantError if the matching or the regularity check fails.
RegularSkeleton complete_to_regular(const BipartiteMap& map);

/// Drops every dart at or above `original_dart_count`, giving back the map the
/// skeleton was completed from.
BipartiteMap erase_added_leaves(const BipartiteMap& map, int original_dart_count);

/// Labels whites by directed distance from base_white (label 1), where the
/// next white counterclockwise around a black vertex is one further. A seed
/// shuffles the exploration order. Throws InputError on a non-regular map and
/// InvariantError on a conflicting label.
Representation label_regular(const RegularSkeleton& skeleton,
                             std::optional<VertexId> base_white = std::nullopt,
                             std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Checks the representation invariants; throws InvariantError naming the
/// first failure.
void validate_representation(const Representation& rep);

/// Builds a representation from a labeled map, validating it. Throws
/// InputError when the labels do not form an increasing labeling.
Representation make_representation(BipartiteMap map, std::vector<int> labels,
                                   int original_dart_count);

/// sigma_i sends the face before each dart of a white labeled i to the face
/// before the next dart counterclockwise. Checks cycle types, transitivity
/// and the product; throws InvariantError naming the failed one.
MonodromyWitness extract_monodromy(const Representation& rep);

/// Composes the permutations under the frozen order.
Permutation monodromy_product(const MonodromyWitness& witness);

/// Everything produced along the way from a ramification list to a covering.
struct Realization {
  IncidenceMatrix matrix;
  BipartiteGraph graph;
  BipartiteMap skeleton;
  RegularSkeleton regular;
  Representation representation;
  Passport passport;
  MonodromyWitness monodromy;
};

/// Runs construct_matrix, matrix_to_graph, embed_planar, both balance checks,
/// complete_to_regular, label_regular and the two extractions. A failing stage
/// raises an error carrying the stage name.
Realization realize_distribution(const RamificationDistribution& list);

/// Largest degree passport_oracle accepts.
inline constexpr int kOracleDegreeLimit = 6;

/// True iff permutations with the given cycle types multiply to the identity
/// and generate a transitive group. False when the Riemann-Hurwitz sum fails.
bool passport_oracle(const Passport& passport);

}  // namespace ramify
