#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "ramify/balance.hpp"
#include "ramify/error.hpp"
#include "ramify/graph.hpp"
#include "ramify/matrix.hpp"
#include "ramify/planarity.hpp"

namespace ramify {
namespace {

using ::ramify::testing::all_distributions;
using ::ramify::testing::all_twos_rows;
using ::ramify::testing::threes_and_twos_rows;

using Rows = std::vector<std::vector<int>>;

TEST(RiemannHurwitzTest, Examples) {
  EXPECT_TRUE(riemann_hurwitz_check(Passport{4, {{3, 1}, {2, 2}, {2, 1, 1}, {2, 1, 1}}}));
  EXPECT_TRUE(riemann_hurwitz_check(Passport{4, {{3, 1}, {2, 2}, {2, 2}}}));
  EXPECT_TRUE(riemann_hurwitz_check(RamificationDistribution{4, {3, 2, 2, 2, 2}}));
  EXPECT_FALSE(riemann_hurwitz_check(Passport{4, {{3, 1}, {2, 2}}}));
  EXPECT_FALSE(riemann_hurwitz_check(RamificationDistribution{4, {3, 2, 2}}));
}

TEST(RiemannHurwitzTest, Weights) {
  EXPECT_EQ(Passport::weight({3, 1}), 2);
  EXPECT_EQ(Passport::weight({1, 1, 1}), 0);
  EXPECT_EQ((Passport{4, {{3, 1}, {2, 2}, {2, 1, 1}, {2, 1, 1}}}).weight(), 6);
}

TEST(RiemannHurwitzTest, RejectsMalformedInput) {
  EXPECT_THROW(riemann_hurwitz_check(Passport{4, {{3, 2}}}), InputError);
  EXPECT_THROW(riemann_hurwitz_check(Passport{4, {{4, 0}}}), InputError);
  EXPECT_THROW(riemann_hurwitz_check(RamificationDistribution{4, {5, 2}}), InputError);
  EXPECT_THROW(riemann_hurwitz_check(RamificationDistribution{4, {1, 3}}), InputError);
  EXPECT_THROW((RamificationDistribution{1, {}}).validate(), InputError);
  EXPECT_THROW((RamificationDistribution{3, {3}}).validate(), InputError);
  EXPECT_NO_THROW((RamificationDistribution{3, {3, 3}}).validate());
}

TEST(RiemannHurwitzTest, InvariantUnderPermutation) {
  std::mt19937 rng(7);
  const std::vector<Passport> passports{
      {4, {{3, 1}, {2, 2}, {2, 1, 1}, {2, 1, 1}}},
      {4, {{3, 1}, {2, 2}, {2, 2}}},
      {5, {{3, 1, 1}, {2, 2, 1}, {4, 1}}},
      {6, {{2, 2, 2}, {3, 3}, {5, 1}, {1, 1, 1, 1, 2}}},
  };
  for (const Passport& p : passports) {
    const bool expected = riemann_hurwitz_check(p);
    for (int trial = 0; trial < 20; ++trial) {
      Passport q = p;
      std::shuffle(q.partitions.begin(), q.partitions.end(), rng);
      for (Partition& part : q.partitions) std::shuffle(part.begin(), part.end(), rng);
      EXPECT_EQ(riemann_hurwitz_check(q), expected);
    }
  }
}

TEST(BalancedConditionTest, Figures) {
  EXPECT_TRUE(balanced_condition(IncidenceMatrix::from_rows(all_twos_rows())).satisfied);
  EXPECT_TRUE(balanced_condition(IncidenceMatrix::from_rows(threes_and_twos_rows())).satisfied);
}

TEST(BalancedConditionTest, SingleColumnTwoRows) {
  // d = 1: no proper column set, and the full sum 0 equals 2d - 2.
  const BalancedCondition c = balanced_condition(IncidenceMatrix::from_rows({{1}, {1}}));
  EXPECT_TRUE(c.satisfied);
  EXPECT_TRUE(c.global_holds);
}

TEST(BalancedConditionTest, ReportsViolations) {
  // Three whites joined to both blacks: the full sum is 3 > 2.
  const BalancedCondition global = balanced_condition(IncidenceMatrix::from_rows({{1, 1}, {1, 1}, {1, 1}}));
  EXPECT_FALSE(global.satisfied);
  EXPECT_FALSE(global.global_holds);

  // Three whites on columns 0 and 1 while the global sum holds.
  const BalancedCondition local = balanced_condition(
      IncidenceMatrix::from_rows({{1, 1, 0}, {1, 1, 0}, {1, 1, 0}, {0, 1, 1}}));
  EXPECT_TRUE(local.global_holds);
  EXPECT_FALSE(local.satisfied);
  EXPECT_EQ(local.violating_columns, (std::vector<int>{0, 1}));
}

TEST(BalancedConditionTest, RejectsNonBinaryAndEmpty) {
  EXPECT_THROW(balanced_condition(IncidenceMatrix::from_rows({{2}})), InputError);
  EXPECT_THROW(balanced_condition(IncidenceMatrix(1, 0)), InputError);
  EXPECT_THROW(balanced_condition(IncidenceMatrix(1, kColumnSubsetLimit + 1)), GuardError);
}

TEST(ConstructMatrixTest, Figures) {
  EXPECT_EQ(construct_matrix({4, {2, 2, 2, 2, 2, 2}}).to_rows(), all_twos_rows());
  EXPECT_EQ(construct_matrix({4, {3, 3, 2, 2}}).to_rows(), threes_and_twos_rows());
  EXPECT_EQ(construct_matrix({4, {3, 3, 2, 2}}).to_rows(),
            (Rows{{1, 1, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
}

TEST(ConstructMatrixTest, Degree2) {
  EXPECT_EQ(construct_matrix({2, {2, 2}}).to_rows(), (Rows{{1, 1}, {1, 1}}));
}

TEST(ConstructMatrixTest, RejectsInvalidList) {
  EXPECT_THROW(construct_matrix({4, {2, 2}}), InputError);
}

TEST(MatrixToGraphTest, Examples) {
  const BipartiteGraph one = matrix_to_graph(IncidenceMatrix::from_rows({{1}}));
  EXPECT_EQ(one.white_count, 1);
  EXPECT_EQ(one.black_count, 1);
  EXPECT_EQ(one.edges.size(), 1u);

  const BipartiteGraph two = matrix_to_graph(IncidenceMatrix::from_rows({{2}}));
  ASSERT_EQ(two.edges.size(), 2u);
  EXPECT_EQ(two.edges[0], two.edges[1]);

  const BipartiteGraph fig = matrix_to_graph(IncidenceMatrix::from_rows(all_twos_rows()));
  EXPECT_EQ(fig.white_count + fig.black_count, 10);
  EXPECT_EQ(fig.edges.size(), 12u);
  EXPECT_TRUE(fig.connected());
}

TEST(MatrixToGraphTest, RoundTrip) {
  const IncidenceMatrix m = IncidenceMatrix::from_rows({{2, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(graph_to_matrix(matrix_to_graph(m)), m);
  EXPECT_EQ(matrix_to_graph(m).edges.size(), 5u);
}

TEST(IncidenceMatrixTest, RejectsMalformed) {
  EXPECT_THROW(IncidenceMatrix(2, 2, {1, 0, 1}), InputError);
  EXPECT_THROW(IncidenceMatrix(1, 1, {-1}), InputError);
  EXPECT_THROW(IncidenceMatrix::from_rows({{1, 0}, {1}}), InputError);
}

// Rows of construct_matrix are cyclic intervals; the i-th starts where the
// previous one ended except at the one place where the walk passes column d.
TEST(ConstructMatrixPropertyTest, AllDistributionsUpToDegree7) {
  int checked = 0;
  for (int d = 2; d <= 7; ++d) {
    for (const RamificationDistribution& list : all_distributions(d)) {
      const IncidenceMatrix a = construct_matrix(list);
      const int m = static_cast<int>(list.values.size());
      ASSERT_EQ(a.rows(), m);
      ASSERT_EQ(a.cols(), d);
      ASSERT_TRUE(a.is_binary());
      EXPECT_EQ(a.at(m - 1, d - 1), 1);

      std::vector<int> first(m);
      std::vector<int> last(m);
      for (int i = 0; i < m; ++i) {
        EXPECT_EQ(a.row_sum(i), list.values[i]);
        // Find the interval start: a 1 whose cyclic predecessor is 0 (or the
        // whole row).
        const int a_i = list.values[i];
        int start = 0;
        if (a_i < d) {
          for (int j = 0; j < d; ++j) {
            if (a.at(i, j) && !a.at(i, (j + d - 1) % d)) start = j;
          }
        }
        for (int k = 0; k < a_i; ++k) EXPECT_EQ(a.at(i, (start + k) % d), 1);
        first[i] = start;
        last[i] = (start + a_i - 1) % d;
      }
      EXPECT_EQ(first[0], 0);
      int breaks = 0;
      for (int i = 0; i + 1 < m; ++i) {
        if (list.values[i] == d || list.values[i + 1] == d) continue;
        if (first[i + 1] != last[i]) {
          ++breaks;
          EXPECT_EQ(first[i + 1], (last[i] + 1) % d);
        }
      }
      EXPECT_LE(breaks, 1);

      for (int j = 0; j < d; ++j) {
        EXPECT_GE(a.col_sum(j), 2);
        EXPECT_LE(a.col_sum(j), 4);
        for (int k = j + 1; k < d; ++k) {
          int inner = 0;
          for (int i = 0; i < m; ++i) inner += a.at(i, j) * a.at(i, k);
          EXPECT_LE(inner, 2);
        }
      }
      EXPECT_TRUE(balanced_condition(a).satisfied);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

// balanced_condition agrees with the brute-force balance check on every
// embedding of random small connected planar 0/1 graphs.
TEST(BalancedConditionPropertyTest, AgreesWithBruteForceOnEmbeddings) {
  std::mt19937 rng(42);
  int planar = 0;
  int balanced = 0;
  for (int trial = 0; trial < 3000 && planar < 300; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    IncidenceMatrix a(m, d);
    int ones = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < d; ++j) {
        if (std::bernoulli_distribution(0.55)(rng)) {
          a.set(i, j, 1);
          ++ones;
        }
      }
    }
    if (ones == 0 || ones > kBruteForceEmbeddingEdgeLimit) continue;
    const BipartiteGraph g = matrix_to_graph(a);
    bool isolated = false;
    for (int i = 0; i < m; ++i) isolated |= a.row_sum(i) == 0;
    for (int j = 0; j < d; ++j) isolated |= a.col_sum(j) == 0;
    if (isolated || !g.connected()) continue;
    const std::vector<BipartiteMap> embeddings = brute_force_embeddings(g);
    if (embeddings.empty()) continue;
    ++planar;
    const bool condition = balanced_condition(a).satisfied;
    balanced += condition;
    for (const BipartiteMap& map : embeddings) {
      EXPECT_EQ(check_local_bruteforce(map).balanced(), condition) << ::testing::PrintToString(a.to_rows());
    }
  }
  EXPECT_GE(planar, 100);
  EXPECT_GT(balanced, 0);
}

}  // namespace
}  // namespace ramify
