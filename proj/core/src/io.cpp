#include "ramify/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ramify/error.hpp"

namespace ramify {
namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* stage) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(stage, std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json& value, const std::string& what, const char* stage) {
  if (!value.is_number_integer()) throw InputError(stage, what + " must be an integer");
  return value.get<int>();
}

std::vector<int> as_int_array(const json& value, const std::string& what, const char* stage) {
  if (!value.is_array()) throw InputError(stage, what + " must be an array");
  std::vector<int> out;
  for (const auto& item : value) out.push_back(as_int(item, what + " entry", stage));
  return out;
}

json map_object(const BipartiteMap& map) {
  const RawMap raw = map.to_raw();
  return json{{"darts", raw.darts}, {"alpha", raw.alpha}, {"sigma", raw.sigma},
              {"black_darts", raw.black_darts}};
}

int parse_int(std::string_view token, const char* stage) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw InputError(stage, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

MapDocument parse_map_document(std::string_view text) {
  const char* stage = "read_map";
  const json doc = parse_json(text, stage);
  if (!doc.is_object()) throw InputError(stage, "top level must be an object");
  static const std::set<std::string> known{"darts", "alpha", "sigma", "black_darts", "labels", "degree"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw InputError(stage, "unknown key \"" + key + "\"");
  }
  for (const char* key : {"darts", "alpha", "sigma", "black_darts"}) {
    if (!doc.contains(key)) throw InputError(stage, std::string("missing key \"") + key + "\"");
  }
  MapDocument out;
  out.raw.darts = as_int(doc["darts"], "darts", stage);
  out.raw.alpha = as_int_array(doc["alpha"], "alpha", stage);
  out.raw.sigma = as_int_array(doc["sigma"], "sigma", stage);
  out.raw.black_darts = as_int_array(doc["black_darts"], "black_darts", stage);
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_object()) throw InputError(stage, "labels must be an object");
    for (const auto& [key, value] : labels.items()) {
      out.labels.emplace_back(parse_int(key, stage), as_int(value, "label", stage));
    }
  }
  if (doc.contains("degree")) out.degree = as_int(doc["degree"], "degree", stage);
  return out;
}

BipartiteMap read_map_json(std::string_view text) {
  return BipartiteMap::from_raw(parse_map_document(text).raw);
}

std::vector<int> labels_by_vertex(const BipartiteMap& map, const MapDocument& doc) {
  const char* stage = "read_map";
  const RotationMap& rot = map.rotation();
  std::vector<int> labels(rot.vertex_count(), 0);
  for (const auto& [dart, label] : doc.labels) {
    if (dart < 0 || dart >= rot.dart_count()) {
      throw InputError(stage, "label key " + std::to_string(dart) + " is not a dart");
    }
    const VertexId v = rot.vertex_of(dart);
    if (map.color(v) != Color::kWhite) {
      throw InputError(stage, "label key " + std::to_string(dart) + " is a black dart");
    }
    if (label < 1) throw InputError(stage, "labels must be positive");
    if (labels[v] != 0) throw InputError(stage, "white vertex labeled twice");
    labels[v] = label;
  }
  return labels;
}

std::string write_map_json(const BipartiteMap& map) { return map_object(map).dump(); }

Representation read_representation_json(std::string_view text) {
  const char* stage = "read_representation";
  const MapDocument doc = parse_map_document(text);
  BipartiteMap map = BipartiteMap::from_raw(doc.raw);
  std::vector<int> labels = labels_by_vertex(map, doc);
  for (VertexId w : map.white_vertices()) {
    if (labels[w] == 0) throw InputError(stage, "white vertex " + std::to_string(w) + " has no label");
  }
  if (!doc.degree) throw InputError(stage, "missing key \"degree\"");
  if (*doc.degree != map.black_count()) {
    throw InputError(stage, "degree " + std::to_string(*doc.degree) + " differs from the " +
                                std::to_string(map.black_count()) + " black vertices");
  }
  const int darts = map.rotation().dart_count();
  return make_representation(std::move(map), std::move(labels), darts);
}

std::string write_representation_json(const Representation& rep) {
  json doc = map_object(rep.map);
  json labels = json::object();
  const RotationMap& rot = rep.map.rotation();
  for (VertexId w : rep.map.white_vertices()) {
    labels[std::to_string(rot.vertex_darts(w).front())] = rep.labels[w];
  }
  doc["labels"] = std::move(labels);
  doc["degree"] = rep.degree();
  return doc.dump();
}

IncidenceMatrix read_matrix_text(std::string_view text) {
  const char* stage = "read_matrix";
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto tokens = [&](const std::string& s) {
    std::vector<int> values;
    std::istringstream words(s);
    std::string word;
    while (words >> word) values.push_back(parse_int(word, stage));
    return values;
  };
  if (!next_line()) throw InputError(stage, "empty matrix file");
  const auto header = tokens(line);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw InputError(stage, "first line must be \"m d\"");
  }
  std::vector<int> entries;
  for (int i = 0; i < header[0]; ++i) {
    if (!next_line()) throw InputError(stage, "expected " + std::to_string(header[0]) + " rows");
    const auto row = tokens(line);
    if (static_cast<int>(row.size()) != header[1]) {
      throw InputError(stage, "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(header[1]));
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  if (next_line()) throw InputError(stage, "trailing content after the last row");
  return IncidenceMatrix(header[0], header[1], std::move(entries));
}

std::string write_matrix_text(const IncidenceMatrix& matrix) {
  std::ostringstream out;
  out << matrix.rows() << ' ' << matrix.cols() << '\n';
  for (int i = 0; i < matrix.rows(); ++i) {
    for (int j = 0; j < matrix.cols(); ++j) out << (j ? " " : "") << matrix.at(i, j);
    out << '\n';
  }
  return out.str();
}

Passport parse_passport(std::string_view text, std::optional<int> degree) {
  const char* stage = "read_passport";
  const json doc = parse_json(text, stage);
  if (!doc.is_array() || doc.empty()) throw InputError(stage, "passport must be a nonempty list of lists");
  Passport passport;
  for (const auto& part : doc) passport.partitions.push_back(as_int_array(part, "partition", stage));
  const auto& first = passport.partitions.front();
  int sum = 0;
  for (int k : first) sum += k;
  passport.degree = degree.value_or(sum);
  passport.validate();
  return passport;
}

std::string format_passport(const Passport& passport) {
  return json(passport.partitions).dump();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    values.push_back(parse_int(token, "read_list"));
    start = comma + 1;
  }
  return values;
}

std::string to_dot(const BipartiteMap& map, const std::vector<int>& labels) {
  const RotationMap& rot = map.rotation();
  auto name = [&](VertexId v) {
    return (map.color(v) == Color::kBlack ? "b" : "w") + std::to_string(rot.vertex_darts(v).front());
  };
  std::ostringstream out;
  out << "graph map {\n";
  for (VertexId v = 0; v < rot.vertex_count(); ++v) {
    const int label = v < static_cast<int>(labels.size()) ? labels[v] : 0;
    const std::string text = label > 0 ? std::to_string(label) : "";
    if (map.color(v) == Color::kBlack) {
      out << "  " << name(v) << " [shape=circle, style=filled, fillcolor=black, label=\"\"];\n";
    } else {
      out << "  " << name(v) << " [shape=circle, style=solid, label=\"" << text << "\"];\n";
    }
  }
  for (Dart x = 0; x < rot.dart_count(); ++x) {
    if (map.is_black(x)) continue;
    out << "  " << name(rot.vertex_of(rot.alpha(x))) << " -- " << name(rot.vertex_of(x)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("read_file", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("write_file", "cannot open " + path + " for writing");
  out << text;
}

}  // namespace ramify
