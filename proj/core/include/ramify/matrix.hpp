#pragma once

#include <span>
#include <vector>

#include "ramify/graph.hpp"

namespace ramify {

struct Representation;

/// White-to-black incidence matrix: entry (i, j) counts the edges between
/// white i and black j.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(int rows, int cols);
  /// Row-major entries; throws InputError on a shape mismatch or a negative entry.
  IncidenceMatrix(int rows, int cols, std::vector<int> entries);
  static IncidenceMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int row, int col) const { return entries_[row * cols_ + col]; }
  void set(int row, int col, int value);

  int row_sum(int row) const;
  int col_sum(int col) const;
  bool is_binary() const;
  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;
};

/// The critical ramification numbers (a_1, ..., a_m) of a degree-d covering.
struct RamificationDistribution {
  int degree = 0;
  std::vector<int> values;

  /// Throws InputError unless d >= 2, every 2 <= a_i <= d and
  /// sum (a_i - 1) == 2d - 2.
  void validate() const;
};

using Partition = std::vector<int>;

/// A list of partitions of `degree`, one per critical value.
struct Passport {
  int degree = 0;
  std::vector<Partition> partitions;

  /// sum (k - 1) over the parts.
  static int weight(const Partition& partition);
  int weight() const;
  /// Throws InputError when a partition has a part < 1 or does not sum to degree.
  void validate() const;
};

/// nu(D) == 2d - 2. Throws InputError on a malformed passport.
bool riemann_hurwitz_check(const Passport& passport);
/// sum (a_i - 1) == 2d - 2. Throws InputError when some a_i is outside [2, d].
bool riemann_hurwitz_check(const RamificationDistribution& list);

/// Largest column count balanced_condition enumerates.
inline constexpr int kColumnSubsetLimit = 16;

struct BalancedCondition {
  bool satisfied = false;
  /// sum_i (row_i - 1) == 2d - 2.
  bool global_holds = false;
  /// First violating proper column set by cardinality, empty when none.
  std::vector<int> violating_columns;
};

/// Checks sum_i [max(1, sum_{j in S} a_ij) - 1] <= 2|S| - 2 on every nonempty
/// proper column set S, and the unclamped full-column equality. Requires a
/// 0/1 matrix.
BalancedCondition balanced_condition(const IncidenceMatrix& matrix);

/// The m x d matrix of the recursive placement: with b_0 = 1 and
/// b_j = a_1 + ... + a_j - j + 1, row i+1 covers columns b_i..b_{i+1} (wrapping
/// past d back to 1) while b_i < d, and b_i-d+1..b_{i+1}-d+1 afterwards.
IncidenceMatrix construct_matrix(const RamificationDistribution& list);

/// m whites, d blacks and a_ij parallel edges, enumerated row-major.
BipartiteGraph matrix_to_graph(const IncidenceMatrix& matrix);
IncidenceMatrix graph_to_matrix(const BipartiteGraph& graph);

/// Partition of d per label class: degrees of the whites with that label,
/// padded with 1s. Trivial classes (all 1s) are not critical values and are
/// left out. Throws InvariantError when a class exceeds d.
Passport extract_passport(const Representation& rep);

}  // namespace ramify
