#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramify/map.hpp"
#include "ramify/matrix.hpp"
#include "ramify/realize.hpp"

namespace ramify {

/// Map JSON: {"alpha":[...],"black_darts":[...],"darts":2E,"sigma":[...]},
/// optionally with "labels" (white representative dart -> label) and
/// "degree". Parsing checks the JSON shape only; see validate().
struct MapDocument {
  RawMap raw;
  /// Label per white representative dart as written in the file.
  std::vector<std::pair<Dart, int>> labels;
  std::optional<int> degree;
};

MapDocument parse_map_document(std::string_view text);

/// Parses and validates a map; labels and degree, if present, are ignored.
BipartiteMap read_map_json(std::string_view text);
/// Labels per VertexId (0 where absent) of a parsed document on its map.
std::vector<int> labels_by_vertex(const BipartiteMap& map, const MapDocument& doc);

/// Canonical text: sorted keys, no whitespace, minimal representatives.
std::string write_map_json(const BipartiteMap& map);

/// Requires "labels" on every white and a matching "degree".
Representation read_representation_json(std::string_view text);
std::string write_representation_json(const Representation& rep);

/// First line "m d", then m lines of d space-separated integers.
IncidenceMatrix read_matrix_text(std::string_view text);
std::string write_matrix_text(const IncidenceMatrix& matrix);

/// Nested bracket list such as [[3,1],[2,2]]. The degree is the sum of the
/// first partition unless given.
Passport parse_passport(std::string_view text, std::optional<int> degree = std::nullopt);
std::string format_passport(const Passport& passport);

/// Comma-separated integers, e.g. "3,2,2,2,2".
std::vector<int> parse_int_list(std::string_view text);

/// Graphviz DOT: black vertices filled, white vertices hollow, labels (when
/// nonzero) as node text.
std::string to_dot(const BipartiteMap& map, const std::vector<int>& labels = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace ramify
