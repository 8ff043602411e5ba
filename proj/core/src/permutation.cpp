#include "ramify/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ramify/error.hpp"

namespace ramify {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= size() || hit[image]) {
      throw InputError("permutation", "image table is not a bijection");
    }
    hit[image] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int size, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images.at(cycle[i]) = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::after(const Permutation& other) const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < size(); ++x) images[x] = images_[other.images_[x]];
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < size(); ++x) images[images_[x]] = x;
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = result.emplace_back();
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
  }
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& cycle : cycles()) lengths.push_back(static_cast<int>(cycle.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  std::string text = out.str();
  return text.empty() ? "()" : text;
}

bool generates_transitive_group(const std::vector<Permutation>& generators, int size) {
  if (size <= 1) return true;
  std::vector<bool> reached(size, false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      int y = g(x);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == size;
}

}  // namespace ramify
