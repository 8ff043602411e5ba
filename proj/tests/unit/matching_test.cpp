#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "ramify/error.hpp"
#include "ramify/matching.hpp"

namespace ramify {
namespace {

MatchingInstance unit_instance(int right, std::vector<std::vector<int>> sets) {
  MatchingInstance inst;
  inst.left_count = static_cast<int>(sets.size());
  inst.capacity.assign(right, 1);
  inst.adjacency = std::move(sets);
  return inst;
}

int capacity_of(const MatchingInstance& inst, const std::vector<int>& lefts) {
  std::set<int> neighbors;
  for (int l : lefts) neighbors.insert(inst.adjacency[l].begin(), inst.adjacency[l].end());
  int total = 0;
  for (int r : neighbors) total += inst.capacity[r];
  return total;
}

void expect_consistent(const MatchingInstance& inst, const Matching& m) {
  ASSERT_EQ(static_cast<int>(m.partner.size()), inst.left_count);
  std::vector<int> used(inst.right_count(), 0);
  int size = 0;
  for (int l = 0; l < inst.left_count; ++l) {
    const int r = m.partner[l];
    if (r < 0) continue;
    ++size;
    ++used[r];
    const auto& adj = inst.adjacency[l];
    EXPECT_NE(std::find(adj.begin(), adj.end(), r), adj.end());
  }
  EXPECT_EQ(size, m.size);
  for (int r = 0; r < inst.right_count(); ++r) EXPECT_LE(used[r], inst.capacity[r]);
}

TEST(MaxMatchingTest, TwoSetsOneElement) {
  const auto inst = unit_instance(1, {{0}, {0}});
  EXPECT_EQ(max_matching(inst).size, 1);
}

TEST(MaxMatchingTest, TriangleHasSdr) {
  const auto inst = unit_instance(3, {{0, 1}, {1, 2}, {2, 0}});
  const Matching m = max_matching(inst);
  EXPECT_EQ(m.size, 3);
  expect_consistent(inst, m);
}

TEST(MaxMatchingTest, Empty) {
  EXPECT_EQ(max_matching(MatchingInstance{}).size, 0);
  EXPECT_TRUE(has_perfect_matching(MatchingInstance{}).perfect);
}

TEST(MaxMatchingTest, CapacityActsAsMultiplicity) {
  MatchingInstance inst = unit_instance(1, {{0}, {0}, {0}});
  inst.capacity[0] = 2;
  EXPECT_EQ(max_matching(inst).size, 2);
}

TEST(MaxMatchingTest, RejectsBadInstances) {
  MatchingInstance inst = unit_instance(1, {{1}});
  EXPECT_THROW(max_matching(inst), InputError);
  inst = unit_instance(1, {{0}});
  inst.capacity[0] = -1;
  EXPECT_THROW(max_matching(inst), InputError);
}

TEST(HallTest, ViolatorForTwoSetsOneElement) {
  const auto inst = unit_instance(1, {{0}, {0}});
  const HallVerdict verdict = has_perfect_matching(inst);
  EXPECT_FALSE(verdict.perfect);
  EXPECT_EQ(verdict.violator, (std::vector<int>{0, 1}));
  EXPECT_EQ(verdict.violator_capacity, 1);
}

TEST(HallTest, TrianglePerfect) {
  EXPECT_TRUE(has_perfect_matching(unit_instance(3, {{0, 1}, {1, 2}, {2, 0}})).perfect);
}

TEST(HallTest, ZeroDotsZeroCapacityIsPerfect) {
  MatchingInstance inst;
  inst.capacity = {0, 0};
  EXPECT_TRUE(has_perfect_matching(inst).perfect);
}

// Maximum matching size equals min over left subsets F of
// left_count - |F| + capacity(N(F)), checked by brute force.
TEST(HallTest, DualityOnRandomInstances) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 400; ++trial) {
    const int left = std::uniform_int_distribution<int>(0, 12)(rng);
    const int right = std::uniform_int_distribution<int>(1, 6)(rng);
    MatchingInstance inst;
    inst.left_count = left;
    for (int r = 0; r < right; ++r) inst.capacity.push_back(std::uniform_int_distribution<int>(0, 2)(rng));
    for (int l = 0; l < left; ++l) {
      std::vector<int> adj;
      for (int r = 0; r < right; ++r) {
        if (std::bernoulli_distribution(0.35)(rng)) adj.push_back(r);
      }
      inst.adjacency.push_back(std::move(adj));
    }
    int best = left;
    for (unsigned mask = 0; mask < (1u << left); ++mask) {
      std::vector<int> family;
      for (int l = 0; l < left; ++l) {
        if (mask >> l & 1) family.push_back(l);
      }
      best = std::min(best, left - static_cast<int>(family.size()) + capacity_of(inst, family));
    }
    const Matching m = max_matching(inst);
    expect_consistent(inst, m);
    EXPECT_EQ(m.size, best) << "trial " << trial;

    const HallVerdict verdict = has_perfect_matching(inst);
    EXPECT_EQ(verdict.perfect, best == left);
    if (!verdict.perfect) {
      EXPECT_EQ(verdict.violator_capacity, capacity_of(inst, verdict.violator));
      EXPECT_LT(verdict.violator_capacity, static_cast<int>(verdict.violator.size()));
    }
  }
}

}  // namespace
}  // namespace ramify
