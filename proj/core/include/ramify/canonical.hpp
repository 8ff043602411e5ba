#pragma once

#include <vector>

#include "ramify/map.hpp"

namespace ramify {

/// Canonical code of a bipartite map up to color- and orientation-preserving
/// isomorphism: the lexicographically least (alpha, sigma) table pair over all
/// breadth-first dart relabelings rooted at a black dart. Two maps are
/// isomorphic iff their codes are equal.
std::vector<int> canonical_code(const BipartiteMap& map);

/// The map relabeled by its canonical dart order.
BipartiteMap canonical_relabel(const BipartiteMap& map);

/// Number of color- and orientation-preserving automorphisms.
int automorphism_count(const BipartiteMap& map);

}  // namespace ramify
