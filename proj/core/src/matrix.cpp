#include "ramify/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "ramify/error.hpp"
#include "ramify/realize.hpp"

namespace ramify {

IncidenceMatrix::IncidenceMatrix(int rows, int cols)
    : IncidenceMatrix(rows, cols, std::vector<int>(std::max(0, rows * cols), 0)) {}

IncidenceMatrix::IncidenceMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InputError("matrix", "negative dimensions");
  if (static_cast<int>(entries_.size()) != rows * cols) {
    throw InputError("matrix", "expected " + std::to_string(rows * cols) + " entries, got " +
                                   std::to_string(entries_.size()));
  }
  for (int value : entries_) {
    if (value < 0) throw InputError("matrix", "negative entry " + std::to_string(value));
  }
}

IncidenceMatrix IncidenceMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<int> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) throw InputError("matrix", "ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IncidenceMatrix(static_cast<int>(rows.size()), cols, std::move(entries));
}

void IncidenceMatrix::set(int row, int col, int value) {
  if (value < 0) throw InputError("matrix", "negative entry " + std::to_string(value));
  entries_.at(row * cols_ + col) = value;
}

int IncidenceMatrix::row_sum(int row) const {
  int sum = 0;
  for (int j = 0; j < cols_; ++j) sum += at(row, j);
  return sum;
}

int IncidenceMatrix::col_sum(int col) const {
  int sum = 0;
  for (int i = 0; i < rows_; ++i) sum += at(i, col);
  return sum;
}

bool IncidenceMatrix::is_binary() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 1; });
}

std::vector<std::vector<int>> IncidenceMatrix::to_rows() const {
  std::vector<std::vector<int>> result(rows_);
  for (int i = 0; i < rows_; ++i) {
    result[i].assign(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
  }
  return result;
}

void RamificationDistribution::validate() const {
  if (degree < 2) throw InputError("ramification", "degree must be at least 2");
  if (!riemann_hurwitz_check(*this)) {
    throw InputError("ramification", "sum of (a_i - 1) must equal 2d - 2 = " +
                                         std::to_string(2 * degree - 2));
  }
}

int Passport::weight(const Partition& partition) {
  int total = 0;
  for (int part : partition) total += part - 1;
  return total;
}

int Passport::weight() const {
  int total = 0;
  for (const auto& partition : partitions) total += weight(partition);
  return total;
}

void Passport::validate() const {
  if (degree < 1) throw InputError("passport", "degree must be positive");
  for (const auto& partition : partitions) {
    int sum = 0;
    for (int part : partition) {
      if (part < 1) throw InputError("passport", "partition part " + std::to_string(part) + " < 1");
      sum += part;
    }
    if (sum != degree) {
      throw InputError("passport", "partition sums to " + std::to_string(sum) + ", not d = " +
                                       std::to_string(degree));
    }
  }
}

bool riemann_hurwitz_check(const Passport& passport) {
  passport.validate();
  return passport.weight() == 2 * passport.degree - 2;
}

bool riemann_hurwitz_check(const RamificationDistribution& list) {
  int total = 0;
  for (int a : list.values) {
    if (a < 2 || a > list.degree) {
      throw InputError("ramification", "ramification number " + std::to_string(a) +
                                           " outside [2, " + std::to_string(list.degree) + "]");
    }
    total += a - 1;
  }
  return total == 2 * list.degree - 2;
}

BalancedCondition balanced_condition(const IncidenceMatrix& matrix) {
  if (!matrix.is_binary()) throw InputError("balanced_condition", "matrix entries must be 0 or 1");
  const int d = matrix.cols();
  const int m = matrix.rows();
  if (d < 1) throw InputError("balanced_condition", "matrix needs at least one column");
  enforce_guard("balanced_condition", "column count", d, kColumnSubsetLimit);
  if (d > 62) throw GuardError("balanced_condition", "subset masks hold at most 62 columns");

  BalancedCondition result;
  int full = 0;
  for (int i = 0; i < m; ++i) full += matrix.row_sum(i) - 1;
  result.global_holds = full == 2 * d - 2;

  std::vector<std::uint64_t> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      if (matrix.at(i, j)) rows[i] |= std::uint64_t{1} << j;
    }
  }
  const std::uint64_t end = std::uint64_t{1} << d;
  for (int k = 1; k < d && result.violating_columns.empty(); ++k) {
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < end;) {
      int excess = 0;
      for (int i = 0; i < m; ++i) {
        excess += std::max(1, __builtin_popcountll(rows[i] & mask)) - 1;
      }
      if (excess > 2 * k - 2) {
        for (int j = 0; j < d; ++j) {
          if (mask >> j & 1) result.violating_columns.push_back(j);
        }
        break;
      }
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }
  result.satisfied = result.global_holds && result.violating_columns.empty();
  return result;
}

IncidenceMatrix construct_matrix(const RamificationDistribution& list) {
  list.validate();
  const int d = list.degree;
  const int m = static_cast<int>(list.values.size());
  IncidenceMatrix matrix(m, d);
  // Positions are 1-based as in the recurrence; columns are stored 0-based.
  int start = 1;
  for (int i = 0; i < m; ++i) {
    const int stop = start + list.values[i] - 1;
    for (int p = start; p <= stop; ++p) {
      const int column = start < d ? (p > d ? p - d : p) : p - d + 1;
      if (matrix.at(i, column - 1) != 0) {
        throw InvariantError("construct_matrix", "row " + std::to_string(i + 1) +
                                                     " revisits column " + std::to_string(column));
      }
      matrix.set(i, column - 1, 1);
    }
    start = stop;
  }
  if (start != 2 * d - 1) {
    throw InvariantError("construct_matrix", "walk did not end at position 2d - 1");
  }
  return matrix;
}

BipartiteGraph matrix_to_graph(const IncidenceMatrix& matrix) {
  BipartiteGraph graph;
  graph.white_count = matrix.rows();
  graph.black_count = matrix.cols();
  for (int i = 0; i < matrix.rows(); ++i) {
    for (int j = 0; j < matrix.cols(); ++j) {
      for (int k = 0; k < matrix.at(i, j); ++k) graph.edges.push_back({i, j});
    }
  }
  return graph;
}

IncidenceMatrix graph_to_matrix(const BipartiteGraph& graph) {
  graph.validate();
  IncidenceMatrix matrix(graph.white_count, graph.black_count);
  for (const auto& e : graph.edges) matrix.set(e.white, e.black, matrix.at(e.white, e.black) + 1);
  return matrix;
}

Passport extract_passport(const Representation& rep) {
  const BipartiteMap& map = rep.map;
  const int d = map.black_count();
  std::vector<Partition> classes(rep.label_count);
  for (VertexId w : map.white_vertices()) {
    const int label = rep.labels[w];
    if (label < 1 || label > rep.label_count) {
      throw InvariantError("extract_passport", "label " + std::to_string(label) + " out of range");
    }
    classes[label - 1].push_back(vertex_degree(map, w));
  }
  Passport passport{d, {}};
  for (int i = 0; i < rep.label_count; ++i) {
    Partition& parts = classes[i];
    const int sum = std::accumulate(parts.begin(), parts.end(), 0);
    if (sum > d) {
      throw InvariantError("extract_passport", "label " + std::to_string(i + 1) +
                                                   " has degree sum " + std::to_string(sum) +
                                                   " > d = " + std::to_string(d));
    }
    parts.insert(parts.end(), d - sum, 1);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (Passport::weight(parts) > 0) passport.partitions.push_back(std::move(parts));
  }
  return passport;
}

}  // namespace ramify
