#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ramify {

/// A permutation of {0, ..., size-1} stored as its image table.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection onto its index range.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  /// Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(int size, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  /// (this ∘ other)(x) = this(other(x)): `other` acts first.
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles (fixed points included), each starting at its minimal element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle lengths in non-increasing order, fixed points included.
  std::vector<int> cycle_type() const;
  /// Cycle notation without fixed points, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// True when the group generated by `generators` acts transitively on the
/// points. An empty generator list is transitive only on at most one point.
bool generates_transitive_group(const std::vector<Permutation>& generators, int size);

}  // namespace ramify
