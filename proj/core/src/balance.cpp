#include "ramify/balance.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ramify/error.hpp"

namespace ramify {
namespace {

std::vector<VertexId> blacks_of_mask(const BipartiteMap& map, std::uint64_t mask) {
  std::vector<VertexId> subset;
  for (int i = 0; i < map.black_count(); ++i) {
    if (mask >> i & 1) subset.push_back(map.black_vertices()[i]);
  }
  return subset;
}

// First violating black subset, by cardinality then by mask value.
std::optional<SubmapWitness> search_violator(const BipartiteMap& map) {
  const int v = map.black_count();
  if (v > 62) throw GuardError("check_local_bruteforce", "subset masks hold at most 62 blacks");
  for (int k = 1; k <= v; ++k) {
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t end = std::uint64_t{1} << v;
    while (mask < end) {
      auto subset = blacks_of_mask(map, mask);
      const SubmapStats stats = submap_stats(map, subset);
      if (stats.face_count > stats.black_count) return SubmapWitness{std::move(subset), stats};
      // Next mask with the same popcount.
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }
  return std::nullopt;
}

std::optional<SubmapWitness> replay(const BipartiteMap& map, std::vector<VertexId> blacks) {
  std::sort(blacks.begin(), blacks.end());
  blacks.erase(std::unique(blacks.begin(), blacks.end()), blacks.end());
  if (blacks.empty()) return std::nullopt;
  const SubmapStats stats = submap_stats(map, blacks);
  if (stats.face_count <= stats.black_count) return std::nullopt;
  return SubmapWitness{std::move(blacks), stats};
}

// A white vertex met twice on one face is a cut vertex; on a globally
// balanced map one of the pieces it separates has too many faces.
SubmapWitness cut_vertex_witness(const BipartiteMap& map, VertexId white) {
  const RotationMap& rot = map.rotation();
  std::vector<int> piece(rot.vertex_count(), -1);
  piece[white] = -2;
  int pieces = 0;
  for (Dart start : rot.vertex_darts(white)) {
    const VertexId first = rot.vertex_of(rot.alpha(start));
    if (piece[first] != -1) continue;
    std::vector<VertexId> stack{first};
    piece[first] = pieces;
    std::vector<VertexId> blacks;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      if (map.color(u) == Color::kBlack) blacks.push_back(u);
      for (Dart x : rot.vertex_darts(u)) {
        const VertexId y = rot.vertex_of(rot.alpha(x));
        if (piece[y] == -1) {
          piece[y] = pieces;
          stack.push_back(y);
        }
      }
    }
    ++pieces;
    if (auto witness = replay(map, std::move(blacks))) return *witness;
  }
  throw InvariantError("check_local_matching",
                       "white vertex doubly incident to a face without a violating piece");
}

std::optional<SubmapWitness> multi_edge_witness(const BipartiteMap& map) {
  const RotationMap& rot = map.rotation();
  for (VertexId v : map.black_vertices()) {
    std::vector<VertexId> neighbors;
    for (Dart x : rot.vertex_darts(v)) neighbors.push_back(rot.vertex_of(rot.alpha(x)));
    std::sort(neighbors.begin(), neighbors.end());
    if (std::adjacent_find(neighbors.begin(), neighbors.end()) != neighbors.end()) {
      return SubmapWitness{{v}, submap_stats(map, std::vector<VertexId>{v})};
    }
  }
  return std::nullopt;
}

}  // namespace

bool check_global(const BipartiteMap& map) {
  const bool faces_match = map.face_count() == map.black_count();
  int excess = 0;
  for (int deg : degrees(map).white) excess += deg - 1;
  const bool hurwitz_form = excess == 2 * map.black_count() - 2;
  if (faces_match != hurwitz_form) {
    throw InvariantError("check_global", "F == V disagrees with sum(deg w - 1) == 2V - 2");
  }
  return faces_match;
}

std::vector<std::pair<VertexId, FaceId>> doubly_incident_whites(const BipartiteMap& map) {
  const RotationMap& rot = map.rotation();
  std::vector<std::pair<VertexId, FaceId>> found;
  std::vector<int> last_face(rot.vertex_count(), -1);
  for (FaceId f = 0; f < rot.face_count(); ++f) {
    for (Dart x : rot.face_darts(f)) {
      const VertexId w = rot.vertex_of(x);
      if (map.color(w) != Color::kWhite) continue;
      if (last_face[w] == f) found.emplace_back(w, f);
      last_face[w] = f;
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::pair{a.second, a.first} < std::pair{b.second, b.first};
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

BalanceReport check_local_bruteforce(const BipartiteMap& map) {
  enforce_guard("check_local_bruteforce", "black vertex count", map.black_count(),
                kBruteForceBlackLimit);
  BalanceReport report;
  report.globally_balanced = check_global(map);
  report.submap_witness = search_violator(map);
  report.locally_balanced = !report.submap_witness.has_value();
  if (!report.locally_balanced) {
    report.reason = "black-subset submap with more faces than black vertices";
  } else if (report.globally_balanced && !doubly_incident_whites(map).empty()) {
    throw InvariantError("check_local_bruteforce",
                         "balanced map has a white vertex doubly incident to a face");
  }
  return report;
}

CompletionInstance completion_instance(const BipartiteMap& map) {
  const RotationMap& rot = map.rotation();
  CompletionInstance result;
  const int n = map.white_count();
  result.regularity = n;

  std::vector<int> black_index(rot.vertex_count(), -1);
  for (int i = 0; i < map.black_count(); ++i) black_index[map.black_vertices()[i]] = i;

  auto& inst = result.instance;
  for (VertexId v : map.black_vertices()) {
    const int deficit = n - vertex_degree(map, v);
    if (deficit < 0) throw InputError("completion_instance", "black degree exceeds W_G");
    inst.capacity.push_back(deficit);
  }
  for (FaceId f = 0; f < rot.face_count(); ++f) {
    const int dots = n - face_degree(map, f);
    if (dots < 0) throw InputError("completion_instance", "face degree exceeds W_G");
    std::vector<int> blacks;
    for (Dart x : rot.face_darts(f)) {
      if (map.is_black(x)) blacks.push_back(black_index[rot.vertex_of(x)]);
    }
    std::sort(blacks.begin(), blacks.end());
    blacks.erase(std::unique(blacks.begin(), blacks.end()), blacks.end());
    for (int k = 0; k < dots; ++k) {
      inst.adjacency.push_back(blacks);
      result.dot_face.push_back(f);
    }
  }
  inst.left_count = static_cast<int>(inst.adjacency.size());
  return result;
}

BalanceReport check_local_matching(const BipartiteMap& map) {
  if (!check_global(map)) {
    throw InputError("check_local_matching", "map is not globally balanced");
  }
  BalanceReport report;
  report.globally_balanced = true;

  if (const auto doubly = doubly_incident_whites(map); !doubly.empty()) {
    report.reason = "white vertex doubly incident to a face";
    report.submap_witness = cut_vertex_witness(map, doubly.front().first);
    return report;
  }
  if (auto witness = multi_edge_witness(map)) {
    report.reason = "black vertex with a repeated white neighbor";
    report.submap_witness = std::move(witness);
    return report;
  }

  const CompletionInstance completion = completion_instance(map);
  const HallVerdict verdict = has_perfect_matching(completion.instance);
  report.locally_balanced = verdict.perfect;
  if (verdict.perfect) return report;

  report.reason = "completion dots violate the marriage condition";
  HallWitness hall;
  hall.dots = static_cast<int>(verdict.violator.size());
  hall.capacity = verdict.violator_capacity;
  for (int dot : verdict.violator) hall.faces.push_back(completion.dot_face[dot]);
  hall.faces.erase(std::unique(hall.faces.begin(), hall.faces.end()), hall.faces.end());

  std::vector<VertexId> incident;
  for (FaceId f : hall.faces) {
    for (Dart x : map.rotation().face_darts(f)) {
      if (map.is_black(x)) incident.push_back(map.rotation().vertex_of(x));
    }
  }
  report.submap_witness = replay(map, std::move(incident));
  if (!report.submap_witness && map.black_count() <= kBruteForceBlackLimit) {
    report.submap_witness = search_violator(map);
  }
  report.hall_witness = std::move(hall);
  return report;
}

bool strict_face_subset_check(const BipartiteMap& map) {
  const RotationMap& rot = map.rotation();
  const int faces = rot.face_count();
  enforce_guard("strict_face_subset_check", "face count", faces, kFaceSubsetLimit);
  if (faces > 62) throw GuardError("strict_face_subset_check", "subset masks hold at most 62 faces");
  const int words = (rot.vertex_count() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> incident(faces, std::vector<std::uint64_t>(words, 0));
  for (FaceId f = 0; f < faces; ++f) {
    for (Dart x : rot.face_darts(f)) {
      if (!map.is_black(x)) continue;
      const VertexId v = rot.vertex_of(x);
      incident[f][v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  const std::uint64_t full = (std::uint64_t{1} << faces) - 1;
  std::vector<std::uint64_t> acc(words);
  for (std::uint64_t subset = 1; subset < full; ++subset) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int f = 0; f < faces; ++f) {
      if (!(subset >> f & 1)) continue;
      for (int w = 0; w < words; ++w) acc[w] |= incident[f][w];
    }
    int blacks = 0;
    for (auto word : acc) blacks += __builtin_popcountll(word);
    if (blacks <= __builtin_popcountll(subset)) return false;
  }
  return true;
}

}  // namespace ramify
