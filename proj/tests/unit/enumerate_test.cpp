#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "ramify/canonical.hpp"
#include "ramify/enumerate.hpp"
#include "ramify/error.hpp"
#include "ramify/io.hpp"

namespace ramify {
namespace {

using ::ramify::testing::quadrilateral;
using ::ramify::testing::single_edge;
using ::ramify::testing::star;
using ::ramify::testing::two_parallel_edges;

bool contains(const std::vector<BipartiteMap>& maps, const BipartiteMap& map) {
  const std::vector<int> code = canonical_code(map);
  return std::any_of(maps.begin(), maps.end(),
                     [&](const BipartiteMap& m) { return canonical_code(m) == code; });
}

// Rooted bipartite planar maps with n edges: 3 * 2^(n-1) * (2n)! / (n! (n+2)!).
long double rooted_count(int n) {
  long double value = 3.0L * std::pow(2.0L, n - 1);
  for (int k = n + 1; k <= 2 * n; ++k) value *= k;
  for (int k = 1; k <= n + 2; ++k) value /= k;
  return value;
}

// Number of sigma on 2e darts, alpha = (0 1)(2 3)..., that give a connected
// genus-0 map with a proper 2-coloring of its vertices.
long labelled_planar_bipartite(int e) {
  const int n = 2 * e;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  long count = 0;
  do {
    std::vector<int> vertex(n, -1);
    int vertices = 0;
    for (int x = 0; x < n; ++x) {
      if (vertex[x] >= 0) continue;
      for (int y = x; vertex[y] < 0; y = sigma[y]) vertex[y] = vertices;
      ++vertices;
    }
    // Connectivity and 2-coloring over the vertex graph.
    std::vector<int> color(vertices, -1);
    color[0] = 0;
    std::vector<int> stack{0};
    bool bipartite = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int x = 0; x < n; ++x) {
        if (vertex[x] != v) continue;
        const int u = vertex[x ^ 1];
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          bipartite = false;
        }
      }
    }
    if (!bipartite || std::count(color.begin(), color.end(), -1) > 0) continue;
    std::vector<bool> seen(n, false);
    int faces = 0;
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      ++faces;
      for (int y = x; !seen[y]; y = sigma[y ^ 1]) seen[y] = true;
    }
    if (vertices - e + faces == 2) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

TEST(EnumerateTest, OneEdge) {
  const auto maps = enumerate_maps({1, false});
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(canonical_code(maps[0]), canonical_code(single_edge()));
}

TEST(EnumerateTest, BalancedTwoEdges) {
  const auto maps = enumerate_maps({2, true});
  EXPECT_TRUE(contains(maps, star(2)));
  EXPECT_FALSE(contains(maps, two_parallel_edges()));
  EXPECT_TRUE(contains(enumerate_maps({2, false}), two_parallel_edges()));
}

TEST(EnumerateTest, BalancedFourEdgesIncludeQuadrilateral) {
  EXPECT_TRUE(contains(enumerate_maps({4, true}), quadrilateral()));
}

TEST(EnumerateTest, GuardAndBadInput) {
  EXPECT_THROW(enumerate_maps({kEnumerationEdgeLimit + 1, false}), GuardError);
  EXPECT_THROW(enumerate_maps({0, false}), InputError);
}

TEST(EnumerateTest, OutputIsCanonicalAndSorted) {
  const auto maps = enumerate_maps({5, false});
  for (std::size_t i = 0; i < maps.size(); ++i) {
    EXPECT_EQ(canonical_relabel(maps[i]).rotation().sigma_table(), maps[i].rotation().sigma_table());
    if (i > 0 && maps[i - 1].edge_count() == maps[i].edge_count()) {
      EXPECT_LT(canonical_code(maps[i - 1]), canonical_code(maps[i]));
    }
  }
}

// Each class with e edges contributes e / |Aut| rooted maps.
TEST(EnumeratePropertyTest, MatchesRootedCount) {
  std::vector<long double> sum(8, 0);
  for (const BipartiteMap& map : enumerate_maps({7, false})) {
    sum[map.edge_count()] += static_cast<long double>(map.edge_count()) / automorphism_count(map);
  }
  for (int e = 1; e <= 7; ++e) EXPECT_NEAR(static_cast<double>(sum[e]), static_cast<double>(rooted_count(e)), 1e-9) << e;
  EXPECT_NEAR(static_cast<double>(rooted_count(7)), 9152.0, 1e-9);
}

// Labelled maps: the 2^e e! relabelings commuting with alpha act on the
// (sigma, coloring) pairs with stabilizer Aut, so the sum of 1/|Aut| equals
// 2 L / (2^e e!), where the factor 2 picks the color of one side.
TEST(EnumeratePropertyTest, MatchesLabelledBruteForce) {
  const auto maps = enumerate_maps({4, false});
  for (int e = 1; e <= 4; ++e) {
    long double sum = 0;
    for (const BipartiteMap& map : maps) {
      if (map.edge_count() == e) sum += 1.0L / automorphism_count(map);
    }
    long double group = std::pow(2.0L, e);
    for (int k = 2; k <= e; ++k) group *= k;
    EXPECT_NEAR(static_cast<double>(sum), static_cast<double>(2.0L * labelled_planar_bipartite(e) / group), 1e-9)
        << e;
  }
}

TEST(EnumeratePropertyTest, JsonRoundTrip) {
  for (const BipartiteMap& map : enumerate_maps({6, false})) {
    const std::string text = write_map_json(map);
    const BipartiteMap back = read_map_json(text);
    EXPECT_EQ(write_map_json(back), text);
  }
}

TEST(EnumeratePropertyTest, CountsAreDeterministicAndFrozen) {
  const EnumerationCounts first = enumerate_maps({7, true}, [](const BipartiteMap&) {});
  const EnumerationCounts second = enumerate_maps({7, true}, [](const BipartiteMap&) {});
  EXPECT_EQ(first.total, second.total);
  EXPECT_EQ(first.emitted, second.emitted);

  const char* dir = std::getenv("RAMIFY_TEST_DATA");
  ASSERT_NE(dir, nullptr);
  std::ifstream in(std::string(dir) + "/enumeration_counts.json");
  ASSERT_TRUE(in.good());
  const nlohmann::json fixture = nlohmann::json::parse(in);
  const auto total = fixture.at("total").get<std::vector<long>>();
  const auto balanced = fixture.at("balanced").get<std::vector<long>>();
  ASSERT_EQ(total.size(), 7u);
  ASSERT_EQ(balanced.size(), 7u);
  for (int e = 1; e <= 7; ++e) {
    EXPECT_EQ(first.total[e], total[e - 1]) << e;
    EXPECT_EQ(first.emitted[e], balanced[e - 1]) << e;
  }
}

TEST(GrowLevelTest, RebuildsEachLevel) {
  std::vector<BipartiteMap> level = enumerate_maps({1, false});
  const auto all = enumerate_maps({5, false});
  for (int e = 2; e <= 5; ++e) {
    level = grow_level(level);
    const auto expected = std::count_if(all.begin(), all.end(),
                                        [&](const BipartiteMap& m) { return m.edge_count() == e; });
    EXPECT_EQ(static_cast<long>(level.size()), expected);
  }
}

}  // namespace
}  // namespace ramify
