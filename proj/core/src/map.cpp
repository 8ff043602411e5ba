#include "ramify/map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ramify/error.hpp"

namespace ramify {
namespace {

// Orbits of `step`, each starting at its minimal point, ordered by that point.
template <typename Step>
std::vector<std::vector<int>> orbits_of(int size, Step step, std::vector<int>& owner) {
  std::vector<std::vector<int>> orbits;
  owner.assign(size, -1);
  for (int start = 0; start < size; ++start) {
    if (owner[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    auto& orbit = orbits.emplace_back();
    for (int x = start; owner[x] < 0; x = step(x)) {
      owner[x] = id;
      orbit.push_back(x);
    }
  }
  return orbits;
}

void check_bijection(std::string_view name, int darts, std::span<const int> images,
                     ValidationReport& report, bool& ok) {
  if (static_cast<int>(images.size()) != darts) {
    report.errors.push_back(std::string(name) + " has length " + std::to_string(images.size()) +
                            ", expected " + std::to_string(darts));
    ok = false;
    return;
  }
  std::vector<int> hits(darts, 0);
  for (int x = 0; x < darts; ++x) {
    const int image = images[x];
    if (image < 0 || image >= darts) {
      report.errors.push_back(std::string(name) + " image out of range at dart " +
                              std::to_string(x) + ": " + std::to_string(image));
      ok = false;
    } else {
      ++hits[image];
    }
  }
  for (int y = 0; y < darts; ++y) {
    if (hits[y] > 1) {
      report.errors.push_back(std::string(name) + " is not a bijection: dart " + std::to_string(y) +
                              " is the image of " + std::to_string(hits[y]) + " darts");
      ok = false;
    }
  }
}

}  // namespace

std::string ValidationReport::joined() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < errors.size(); ++i) out << (i ? "; " : "") << errors[i];
  return out.str();
}

ValidationReport validate_rotation(int darts, std::span<const int> alpha,
                                   std::span<const int> sigma) {
  ValidationReport report;
  if (darts < 2 || darts % 2 != 0) {
    report.errors.push_back("dart count must be a positive even number, got " +
                            std::to_string(darts));
    return report;
  }
  bool ok = true;
  check_bijection("alpha", darts, alpha, report, ok);
  check_bijection("sigma", darts, sigma, report, ok);
  if (!ok) return report;

  std::vector<int> fixed;
  bool involution = true;
  for (int x = 0; x < darts; ++x) {
    if (alpha[x] == x) fixed.push_back(x);
    if (alpha[alpha[x]] != x) involution = false;
  }
  if (!fixed.empty()) {
    std::string list;
    for (std::size_t i = 0; i < fixed.size(); ++i) list += (i ? "," : "") + std::to_string(fixed[i]);
    report.errors.push_back("alpha has fixed points (darts " + list + ")");
  }
  if (!involution) report.errors.push_back("alpha is not an involution");
  if (!report.ok()) return report;

  std::vector<bool> seen(darts, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : {alpha[x], sigma[x]}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != darts) {
    report.errors.push_back("not connected");
    return report;
  }

  std::vector<int> owner;
  const int vertices =
      static_cast<int>(orbits_of(darts, [&](int x) { return sigma[x]; }, owner).size());
  const int faces =
      static_cast<int>(orbits_of(darts, [&](int x) { return sigma[alpha[x]]; }, owner).size());
  const int euler = vertices - darts / 2 + faces;
  if (euler != 2) {
    report.errors.push_back("nonzero genus (V - E + F = " + std::to_string(euler) + ")");
  }
  return report;
}

ValidationReport validate(const RawMap& raw) {
  ValidationReport report = validate_rotation(raw.darts, raw.alpha, raw.sigma);
  if (!report.ok()) return report;

  std::vector<int> vertex_of;
  const auto vertices = orbits_of(raw.darts, [&](int x) { return raw.sigma[x]; }, vertex_of);
  std::vector<bool> black(vertices.size(), false);
  for (int rep : raw.black_darts) {
    if (rep < 0 || rep >= raw.darts) {
      report.errors.push_back("black dart " + std::to_string(rep) + " is out of range");
      continue;
    }
    if (black[vertex_of[rep]]) {
      report.errors.push_back("black vertex of dart " + std::to_string(rep) +
                              " is listed more than once");
    }
    black[vertex_of[rep]] = true;
  }
  if (!report.ok()) return report;

  for (int x = 0; x < raw.darts; ++x) {
    const int y = raw.alpha[x];
    if (x < y && black[vertex_of[x]] == black[vertex_of[y]]) {
      report.errors.push_back("edge {" + std::to_string(x) + "," + std::to_string(y) +
                              "} is monochromatic");
    }
  }
  const auto black_count = std::count(black.begin(), black.end(), true);
  if (black_count == 0) report.errors.push_back("no black vertex");
  if (black_count == static_cast<long>(black.size())) report.errors.push_back("no white vertex");
  return report;
}

RotationMap::RotationMap(std::vector<Dart> alpha, std::vector<Dart> sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  const ValidationReport report =
      validate_rotation(static_cast<int>(alpha_.size()), alpha_, sigma_);
  if (!report.ok()) throw InputError("validate", report.joined());

  sigma_inverse_.resize(sigma_.size());
  for (int x = 0; x < dart_count(); ++x) sigma_inverse_[sigma_[x]] = x;
  vertex_orbits_ = orbits_of(dart_count(), [this](int x) { return sigma_[x]; }, vertex_of_);
  face_orbits_ = orbits_of(dart_count(), [this](int x) { return phi(x); }, face_of_);
}

BipartiteMap::BipartiteMap(RotationMap map, std::span<const Dart> black_darts)
    : map_(std::move(map)), colors_(map_.vertex_count(), Color::kWhite) {
  ValidationReport report;
  std::vector<bool> listed(map_.vertex_count(), false);
  for (Dart rep : black_darts) {
    if (rep < 0 || rep >= map_.dart_count()) {
      report.errors.push_back("black dart " + std::to_string(rep) + " is out of range");
      continue;
    }
    const VertexId v = map_.vertex_of(rep);
    if (listed[v]) {
      report.errors.push_back("black vertex of dart " + std::to_string(rep) +
                              " is listed more than once");
    }
    listed[v] = true;
    colors_[v] = Color::kBlack;
  }
  if (report.ok()) {
    for (Dart x = 0; x < map_.dart_count(); ++x) {
      const Dart y = map_.alpha(x);
      if (x < y && dart_color(x) == dart_color(y)) {
        report.errors.push_back("edge {" + std::to_string(x) + "," + std::to_string(y) +
                                "} is monochromatic");
      }
    }
  }
  for (VertexId v = 0; v < map_.vertex_count(); ++v) {
    (colors_[v] == Color::kBlack ? blacks_ : whites_).push_back(v);
  }
  if (report.ok()) {
    if (blacks_.empty()) report.errors.push_back("no black vertex");
    if (whites_.empty()) report.errors.push_back("no white vertex");
  }
  if (!report.ok()) throw InputError("validate", report.joined());
}

BipartiteMap BipartiteMap::from_raw(const RawMap& raw) {
  const ValidationReport report = validate(raw);
  if (!report.ok()) throw InputError("validate", report.joined());
  return BipartiteMap(RotationMap(raw.alpha, raw.sigma), raw.black_darts);
}

RawMap BipartiteMap::to_raw() const {
  RawMap raw;
  raw.darts = map_.dart_count();
  raw.alpha = map_.alpha_table();
  raw.sigma = map_.sigma_table();
  for (VertexId v : blacks_) raw.black_darts.push_back(map_.vertex_darts(v).front());
  return raw;
}

std::vector<std::vector<Dart>> face_orbits(const BipartiteMap& map) {
  return map.rotation().face_orbits();
}

int vertex_degree(const BipartiteMap& map, VertexId v) {
  return static_cast<int>(map.rotation().vertex_darts(v).size());
}

int face_degree(const BipartiteMap& map, FaceId f) {
  const auto& orbit = map.rotation().face_darts(f);
  return static_cast<int>(std::count_if(orbit.begin(), orbit.end(), [&](Dart x) {
    return map.dart_color(x) == Color::kWhite;
  }));
}

Degrees degrees(const BipartiteMap& map) {
  Degrees result;
  for (VertexId w : map.white_vertices()) result.white.push_back(vertex_degree(map, w));
  for (VertexId v : map.black_vertices()) result.black.push_back(vertex_degree(map, v));
  for (FaceId f = 0; f < map.face_count(); ++f) result.face.push_back(face_degree(map, f));
  return result;
}

SubmapStats submap_stats(const BipartiteMap& map, std::span<const VertexId> black_subset) {
  if (black_subset.empty()) throw InputError("submap_stats", "black subset is empty");
  const RotationMap& rot = map.rotation();
  const int n = rot.vertex_count();
  std::vector<bool> chosen(n, false);
  for (VertexId v : black_subset) {
    if (v < 0 || v >= n || map.color(v) != Color::kBlack) {
      throw InputError("submap_stats", "vertex " + std::to_string(v) + " is not a black vertex");
    }
    if (chosen[v]) {
      throw InputError("submap_stats", "vertex " + std::to_string(v) + " is repeated");
    }
    chosen[v] = true;
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  SubmapStats stats;
  stats.black_count = static_cast<int>(black_subset.size());
  std::vector<bool> white_seen(n, false);
  int merges = 0;
  for (VertexId v : black_subset) {
    for (Dart x : rot.vertex_darts(v)) {
      ++stats.edge_count;
      const VertexId w = rot.vertex_of(rot.alpha(x));
      if (!white_seen[w]) {
        white_seen[w] = true;
        ++stats.white_count;
      }
      const int a = find(v);
      const int b = find(w);
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    }
  }
  stats.component_count = stats.black_count + stats.white_count - merges;
  stats.face_count = stats.edge_count - (stats.black_count + stats.white_count) +
                     stats.component_count + 1;
  return stats;
}

BicolorResult try_bicolor(const RotationMap& map) {
  BicolorResult result;
  for (FaceId f = 0; f < map.face_count(); ++f) {
    if (map.face_darts(f).size() % 2 != 0) {
      result.odd_face = f;
      return result;
    }
  }
  std::vector<int> color(map.vertex_count(), -1);
  color[map.vertex_of(0)] = 0;
  std::vector<VertexId> stack{map.vertex_of(0)};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (Dart x : map.vertex_darts(v)) {
      const VertexId w = map.vertex_of(map.alpha(x));
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      } else if (color[w] == color[v]) {
        throw InvariantError("try_bicolor", "even faces but odd cycle on a genus-0 map");
      }
    }
  }
  std::vector<Dart> blacks;
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    if (color[v] == 0) blacks.push_back(map.vertex_darts(v).front());
  }
  result.map.emplace(map, blacks);
  return result;
}

}  // namespace ramify
