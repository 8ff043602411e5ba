#include "ramify/enumerate.hpp"

#include <map>

#include "ramify/balance.hpp"
#include "ramify/canonical.hpp"
#include "ramify/error.hpp"

namespace ramify {
namespace {

BipartiteMap single_edge() {
  const std::vector<Dart> black{0};
  return BipartiteMap(RotationMap({1, 0}, {0, 1}), black);
}

std::vector<Dart> black_reps(const BipartiteMap& map) {
  std::vector<Dart> reps;
  for (VertexId v : map.black_vertices()) reps.push_back(map.rotation().vertex_darts(v).front());
  return reps;
}

}  // namespace

bool is_balanced(const BipartiteMap& map) {
  return check_global(map) && check_local_matching(map).locally_balanced;
}

std::vector<BipartiteMap> grow_level(const std::vector<BipartiteMap>& previous) {
  std::map<std::vector<int>, BipartiteMap> level;
  auto offer = [&](std::vector<Dart> alpha, std::vector<Dart> sigma, std::vector<Dart> blacks) {
    BipartiteMap candidate(RotationMap(std::move(alpha), std::move(sigma)), blacks);
    auto code = canonical_code(candidate);
    if (!level.contains(code)) level.emplace(std::move(code), canonical_relabel(candidate));
  };

  for (const BipartiteMap& map : previous) {
    const RotationMap& rot = map.rotation();
    const Dart n = rot.dart_count();
    std::vector<Dart> alpha = rot.alpha_table();
    alpha.push_back(n + 1);
    alpha.push_back(n);
    const std::vector<Dart> reps = black_reps(map);

    // A new leaf inserted just before x around its vertex.
    for (Dart x = 0; x < n; ++x) {
      std::vector<Dart> sigma = rot.sigma_table();
      sigma[rot.sigma_inverse(x)] = n;
      sigma.push_back(x);
      sigma.push_back(n + 1);
      std::vector<Dart> blacks = reps;
      if (!map.is_black(x)) blacks.push_back(n + 1);
      offer(alpha, std::move(sigma), std::move(blacks));
    }
    // A chord joining the corners before x and before y across their face.
    for (Dart x = 0; x < n; ++x) {
      for (Dart y = x + 1; y < n; ++y) {
        if (rot.face_of(x) != rot.face_of(y) || map.is_black(x) == map.is_black(y)) continue;
        std::vector<Dart> sigma = rot.sigma_table();
        sigma.resize(n + 2);
        sigma[rot.sigma_inverse(x)] = n;
        sigma[n] = x;
        sigma[rot.sigma_inverse(y)] = n + 1;
        sigma[n + 1] = y;
        offer(alpha, std::move(sigma), reps);
      }
    }
  }

  std::vector<BipartiteMap> result;
  result.reserve(level.size());
  for (auto& [code, map] : level) result.push_back(std::move(map));
  return result;
}

EnumerationCounts enumerate_maps(const EnumerationOptions& options,
                                 const std::function<void(const BipartiteMap&)>& emit) {
  if (options.max_edges < 1) throw InputError("enumerate_maps", "max_edges must be at least 1");
  enforce_guard("enumerate_maps", "max_edges", options.max_edges, kEnumerationEdgeLimit);
  EnumerationCounts counts;
  counts.total.assign(options.max_edges + 1, 0);
  counts.emitted.assign(options.max_edges + 1, 0);
  std::vector<BipartiteMap> level{canonical_relabel(single_edge())};
  for (int edges = 1; edges <= options.max_edges; ++edges) {
    if (edges > 1) level = grow_level(level);
    counts.total[edges] = static_cast<long>(level.size());
    for (const BipartiteMap& map : level) {
      if (options.balanced_only && !is_balanced(map)) continue;
      ++counts.emitted[edges];
      emit(map);
    }
  }
  return counts;
}

std::vector<BipartiteMap> enumerate_maps(const EnumerationOptions& options) {
  std::vector<BipartiteMap> maps;
  enumerate_maps(options, [&](const BipartiteMap& map) { maps.push_back(map); });
  return maps;
}

}  // namespace ramify
