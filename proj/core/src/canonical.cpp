#include "ramify/canonical.hpp"

#include <algorithm>

namespace ramify {
namespace {

// Dart order of a breadth-first walk from `root` following alpha then sigma.
std::vector<Dart> walk_order(const RotationMap& map, Dart root, std::vector<int>& label) {
  const int n = map.dart_count();
  label.assign(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  label[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart x = order[i];
    for (Dart y : {map.alpha(x), map.sigma(x)}) {
      if (label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  return order;
}

std::vector<int> code_from(const RotationMap& map, Dart root, std::vector<int>& label) {
  const auto order = walk_order(map, root, label);
  const int n = map.dart_count();
  std::vector<int> code(2 * n);
  for (int i = 0; i < n; ++i) {
    code[i] = label[map.alpha(order[i])];
    code[n + i] = label[map.sigma(order[i])];
  }
  return code;
}

template <typename Visit>
void for_each_black_root(const BipartiteMap& map, Visit visit) {
  for (Dart x = 0; x < map.rotation().dart_count(); ++x) {
    if (map.is_black(x)) visit(x);
  }
}

}  // namespace

std::vector<int> canonical_code(const BipartiteMap& map) {
  std::vector<int> best;
  std::vector<int> label;
  for_each_black_root(map, [&](Dart root) {
    auto code = code_from(map.rotation(), root, label);
    if (best.empty() || code < best) best = std::move(code);
  });
  return best;
}

BipartiteMap canonical_relabel(const BipartiteMap& map) {
  const auto code = canonical_code(map);
  const int n = map.rotation().dart_count();
  std::vector<Dart> alpha(code.begin(), code.begin() + n);
  std::vector<Dart> sigma(code.begin() + n, code.end());
  // Label 0 is a black root; colors propagate through alpha.
  RotationMap rot(std::move(alpha), std::move(sigma));
  std::vector<Color> color(rot.vertex_count(), Color::kWhite);
  std::vector<bool> seen(rot.vertex_count(), false);
  std::vector<VertexId> stack{rot.vertex_of(0)};
  seen[rot.vertex_of(0)] = true;
  color[rot.vertex_of(0)] = Color::kBlack;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (Dart x : rot.vertex_darts(v)) {
      const VertexId w = rot.vertex_of(rot.alpha(x));
      if (!seen[w]) {
        seen[w] = true;
        color[w] = opposite(color[v]);
        stack.push_back(w);
      }
    }
  }
  std::vector<Dart> blacks;
  for (VertexId v = 0; v < rot.vertex_count(); ++v) {
    if (color[v] == Color::kBlack) blacks.push_back(rot.vertex_darts(v).front());
  }
  return BipartiteMap(std::move(rot), blacks);
}

int automorphism_count(const BipartiteMap& map) {
  const auto best = canonical_code(map);
  int count = 0;
  std::vector<int> label;
  for_each_black_root(map, [&](Dart root) {
    if (code_from(map.rotation(), root, label) == best) ++count;
  });
  return count;
}

}  // namespace ramify
