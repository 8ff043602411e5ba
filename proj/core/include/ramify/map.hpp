#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramify {

/// Darts are the half-edges of a map, numbered 0..dart_count-1.
using Dart = int;
/// Vertices and faces are numbered by increasing minimal dart.
using VertexId = int;
using FaceId = int;

enum class Color : std::uint8_t { kBlack, kWhite };

inline Color opposite(Color c) { return c == Color::kBlack ? Color::kWhite : Color::kBlack; }

/// Unvalidated permutation arrays, as read from a file.
struct RawMap {
  int darts = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> black_darts;
};

struct ValidationReport {
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
  std::string joined() const;
};

/// Checks the rotation-system invariants only: array shapes, bijectivity,
/// fixed-point-free involution, connectivity and genus 0.
ValidationReport validate_rotation(int darts, std::span<const int> alpha,
                                   std::span<const int> sigma);

/// Checks every invariant of a bipartite map, reporting each violation.
ValidationReport validate(const RawMap& raw);

/// A connected, genus-0 oriented map given by its edge involution `alpha` and
/// its counterclockwise vertex rotation `sigma`. Faces are the orbits of
/// phi = sigma ∘ alpha. Immutable once constructed.
class RotationMap {
 public:
  /// Throws InputError listing every violated invariant.
  RotationMap(std::vector<Dart> alpha, std::vector<Dart> sigma);

  int dart_count() const { return static_cast<int>(alpha_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertex_orbits_.size()); }
  int face_count() const { return static_cast<int>(face_orbits_.size()); }

  Dart alpha(Dart x) const { return alpha_[x]; }
  Dart sigma(Dart x) const { return sigma_[x]; }
  Dart sigma_inverse(Dart x) const { return sigma_inverse_[x]; }
  Dart phi(Dart x) const { return sigma_[alpha_[x]]; }

  VertexId vertex_of(Dart x) const { return vertex_of_[x]; }
  FaceId face_of(Dart x) const { return face_of_[x]; }

  /// Darts around a vertex in sigma order, starting at the minimal dart.
  const std::vector<Dart>& vertex_darts(VertexId v) const { return vertex_orbits_[v]; }
  /// Darts along a face in phi order, starting at the minimal dart.
  const std::vector<Dart>& face_darts(FaceId f) const { return face_orbits_[f]; }
  const std::vector<std::vector<Dart>>& vertex_orbits() const { return vertex_orbits_; }
  const std::vector<std::vector<Dart>>& face_orbits() const { return face_orbits_; }

  const std::vector<Dart>& alpha_table() const { return alpha_; }
  const std::vector<Dart>& sigma_table() const { return sigma_; }

 private:
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inverse_;
  std::vector<VertexId> vertex_of_;
  std::vector<FaceId> face_of_;
  std::vector<std::vector<Dart>> vertex_orbits_;
  std::vector<std::vector<Dart>> face_orbits_;
};

/// A RotationMap whose vertices are colored black and white so that every
/// edge has one tip of each color.
class BipartiteMap {
 public:
  /// `black_darts` holds one (any) dart per black vertex; all other vertices
  /// are white. Throws InputError on a bad coloring.
  BipartiteMap(RotationMap map, std::span<const Dart> black_darts);
  static BipartiteMap from_raw(const RawMap& raw);

  const RotationMap& rotation() const { return map_; }

  Color color(VertexId v) const { return colors_[v]; }
  Color dart_color(Dart x) const { return colors_[map_.vertex_of(x)]; }
  bool is_black(Dart x) const { return dart_color(x) == Color::kBlack; }

  const std::vector<VertexId>& black_vertices() const { return blacks_; }
  const std::vector<VertexId>& white_vertices() const { return whites_; }

  int black_count() const { return static_cast<int>(blacks_.size()); }
  int white_count() const { return static_cast<int>(whites_.size()); }
  int edge_count() const { return map_.edge_count(); }
  int face_count() const { return map_.face_count(); }

  /// Canonical raw form: black representatives are minimal darts, ascending.
  RawMap to_raw() const;

 private:
  RotationMap map_;
  std::vector<Color> colors_;
  std::vector<VertexId> blacks_;
  std::vector<VertexId> whites_;
};

/// Face orbits of phi = sigma ∘ alpha; each starts at its minimal dart.
std::vector<std::vector<Dart>> face_orbits(const BipartiteMap& map);

/// Vertex and face degrees. `white[i]` belongs to `white_vertices()[i]`,
/// `black[i]` to `black_vertices()[i]`, `face[f]` to face f. A face's degree
/// counts the white corners on its boundary with multiplicity.
struct Degrees {
  std::vector<int> white;
  std::vector<int> black;
  std::vector<int> face;
};

Degrees degrees(const BipartiteMap& map);
int vertex_degree(const BipartiteMap& map, VertexId v);
int face_degree(const BipartiteMap& map, FaceId f);

/// Counts for the submap made of some black vertices, all their edges and the
/// white tips of those edges. Faces follow from the Euler relation for a
/// disjoint union of planar maps: V + W + F = E + 1 + k.
struct SubmapStats {
  int black_count = 0;
  int white_count = 0;
  int edge_count = 0;
  int component_count = 0;
  int face_count = 0;

  friend bool operator==(const SubmapStats&, const SubmapStats&) = default;
};

/// Throws InputError when the subset is empty, repeats a vertex or names a
/// white vertex.
SubmapStats submap_stats(const BipartiteMap& map, std::span<const VertexId> black_subset);

/// Outcome of trying to 2-color an uncolored map.
struct BicolorResult {
  std::optional<BipartiteMap> map;  ///< set when the coloring exists
  std::optional<FaceId> odd_face;   ///< set otherwise: a face with an odd edge count
};

/// Colors the map so that the vertex of dart 0 is black, provided every face
/// has an even number of edge sides.
BicolorResult try_bicolor(const RotationMap& map);

}  // namespace ramify
