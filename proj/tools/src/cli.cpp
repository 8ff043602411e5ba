#include "ramify/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ramify/balance.hpp"
#include "ramify/enumerate.hpp"
#include "ramify/error.hpp"
#include "ramify/io.hpp"
#include "ramify/matrix.hpp"
#include "ramify/planarity.hpp"
#include "ramify/realize.hpp"

namespace ramify::cli {
namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
  } else {
    write_text_file(path, text + "\n");
  }
}

void print_witness(const BipartiteMap& map, const SubmapWitness& witness, std::ostream& out) {
  std::vector<int> darts;
  for (VertexId v : witness.black_vertices) darts.push_back(map.rotation().vertex_darts(v).front());
  const SubmapStats& s = witness.stats;
  out << "witness: black darts [" << join(darts) << "] V=" << s.black_count
      << " W=" << s.white_count << " E=" << s.edge_count << " k=" << s.component_count
      << " F=" << s.face_count << '\n';
}

int check_map(const std::string& file, std::ostream& out) {
  const BipartiteMap map = read_map_json(read_text_file(file));
  const bool global = check_global(map);
  out << "black vertices: " << map.black_count() << ", faces: " << map.face_count() << '\n';
  out << "globally balanced: " << yes_no(global) << '\n';
  BalanceReport report;
  if (global) {
    report = check_local_matching(map);
  } else if (map.black_count() <= kBruteForceBlackLimit || guards_lifted()) {
    report = check_local_bruteforce(map);
  } else {
    out << "locally balanced: not checked\n";
    return kExitFalse;
  }
  out << "locally balanced: " << yes_no(report.locally_balanced);
  if (!report.reason.empty()) out << " (" << report.reason << ")";
  out << '\n';
  if (report.submap_witness) print_witness(map, *report.submap_witness, out);
  if (report.hall_witness) {
    out << "marriage violation: " << report.hall_witness->dots << " dots on faces ["
        << join(report.hall_witness->faces) << "], capacity " << report.hall_witness->capacity << '\n';
  }
  return global && report.locally_balanced ? kExitTrue : kExitFalse;
}

int check_matrix(const std::string& file, std::ostream& out) {
  const IncidenceMatrix matrix = read_matrix_text(read_text_file(file));
  const BipartiteGraph graph = matrix_to_graph(matrix);
  const bool connected = !graph.edges.empty() && graph.connected();
  out << "connected: " << yes_no(connected) << '\n';
  bool planar = false;
  if (connected) {
    const EmbeddingResult embedded = embed_planar(graph);
    planar = embedded.planar();
    out << "planar: " << yes_no(planar);
    if (planar) {
      out << " (" << embedded.map->face_count() << " faces)";
    } else {
      out << " (obstruction edges [" << join(embedded.obstruction) << "])";
    }
    out << '\n';
  }
  const BalancedCondition condition = balanced_condition(matrix);
  out << "balanced condition: " << yes_no(condition.satisfied) << '\n';
  if (!condition.global_holds) out << "column sum: sum(row - 1) != 2d - 2\n";
  if (!condition.violating_columns.empty()) {
    out << "violating columns: [" << join(condition.violating_columns) << "]\n";
  }
  return connected && planar && condition.satisfied ? kExitTrue : kExitFalse;
}

int realize(int degree, const std::string& list, const std::string& output, std::ostream& out,
            std::ostream& err) {
  const RamificationDistribution dist{degree, parse_int_list(list)};
  const Realization result = realize_distribution(dist);
  emit(write_representation_json(result.representation), output, out);
  err << "passport: " << format_passport(result.passport) << '\n';
  return kExitTrue;
}

RegularSkeleton read_skeleton(const std::string& file) {
  BipartiteMap map = read_map_json(read_text_file(file));
  const int n = static_cast<int>(map.rotation().vertex_darts(map.black_vertices().front()).size());
  const int darts = map.rotation().dart_count();
  return RegularSkeleton{std::move(map), n, darts};
}

int label(const std::string& file, std::optional<int> base_dart, const std::string& output,
          std::ostream& out) {
  const RegularSkeleton skeleton = read_skeleton(file);
  std::optional<VertexId> base;
  if (base_dart) {
    const RotationMap& rot = skeleton.map.rotation();
    if (*base_dart < 0 || *base_dart >= rot.dart_count()) {
      throw InputError("label", "--base-white must be a dart of the map");
    }
    base = rot.vertex_of(*base_dart);
  }
  emit(write_representation_json(label_regular(skeleton, base)), output, out);
  return kExitTrue;
}

int monodromy(const std::string& file, std::ostream& out) {
  const Representation rep = read_representation_json(read_text_file(file));
  const MonodromyWitness witness = extract_monodromy(rep);
  out << "degree: " << witness.degree << '\n';
  for (std::size_t i = 0; i < witness.permutations.size(); ++i) {
    out << "sigma_" << i + 1 << " = " << witness.permutations[i].to_cycle_string() << "  type ["
        << join(witness.partitions[i]) << "]\n";
  }
  out << "product: " << monodromy_product(witness).to_cycle_string() << '\n';
  return kExitTrue;
}

int enumerate(int max_edges, bool balanced_only, std::ostream& out, std::ostream& err) {
  const EnumerationCounts counts = enumerate_maps(
      {max_edges, balanced_only}, [&](const BipartiteMap& map) { out << write_map_json(map) << '\n'; });
  long total = 0;
  long emitted = 0;
  for (int e = 1; e <= max_edges; ++e) {
    err << "edges " << e << ": " << counts.total[e] << " maps";
    if (balanced_only) err << ", " << counts.emitted[e] << " balanced";
    err << '\n';
    total += counts.total[e];
    emitted += counts.emitted[e];
  }
  err << "total: " << total << " maps";
  if (balanced_only) err << ", " << emitted << " balanced";
  err << '\n';
  return kExitTrue;
}

int export_dot(const std::string& format, const std::string& file, const std::string& output,
               std::ostream& out) {
  if (format != "dot") throw InputError("export", "unsupported format \"" + format + "\"");
  const MapDocument doc = parse_map_document(read_text_file(file));
  const BipartiteMap map = BipartiteMap::from_raw(doc.raw);
  std::string text = to_dot(map, labels_by_vertex(map, doc));
  text.pop_back();
  emit(text, output, out);
  return kExitTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced bipartite maps and branched coverings of the sphere", "ramify"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string output;
  auto* check_map_cmd = app.add_subcommand("check-map", "Report global and local balance of a map");
  check_map_cmd->add_option("file", file, "Map JSON")->required();

  auto* check_matrix_cmd =
      app.add_subcommand("check-matrix", "Connectivity, planarity and balanced condition of a matrix");
  check_matrix_cmd->add_option("file", file, "Matrix text file")->required();

  int degree = 0;
  std::string ramification;
  auto* realize_cmd = app.add_subcommand("realize", "Realize a ramification distribution");
  realize_cmd->add_option("--degree", degree, "Covering degree d")->required();
  realize_cmd->add_option("--ramification", ramification, "Comma-separated a_1,...,a_m")->required();
  realize_cmd->add_option("-o,--output", output, "Write the representation here");

  auto* complete_cmd = app.add_subcommand("complete", "Complete a balanced map to a regular skeleton");
  complete_cmd->add_option("file", file, "Map JSON")->required();
  complete_cmd->add_option("-o,--output", output, "Write the skeleton here");

  std::optional<int> base_white;
  auto* label_cmd = app.add_subcommand("label", "Label a regular skeleton");
  label_cmd->add_option("file", file, "Skeleton map JSON")->required();
  label_cmd->add_option("--base-white", base_white, "A dart of the white vertex labeled 1");
  label_cmd->add_option("-o,--output", output, "Write the representation here");

  auto* passport_cmd = app.add_subcommand("passport", "Passport of a representation");
  passport_cmd->add_option("file", file, "Representation JSON")->required();

  auto* monodromy_cmd = app.add_subcommand("monodromy", "Sheet permutations of a representation");
  monodromy_cmd->add_option("file", file, "Representation JSON")->required();

  std::string passport_text;
  std::optional<int> oracle_degree;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decide a passport by permutation search");
  oracle_cmd->add_option("--passport", passport_text, "e.g. [[3,1],[2,2],[2,1,1],[2,1,1]]")->required();
  oracle_cmd->add_option("--degree", oracle_degree, "Degree (default: sum of the first partition)");

  int max_edges = 0;
  bool balanced_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List maps up to isomorphism, one JSON per line");
  enumerate_cmd->add_option("--max-edges", max_edges, "Largest edge count")->required();
  enumerate_cmd->add_flag("--balanced-only", balanced_only, "Keep balanced maps only");

  std::string format = "dot";
  auto* export_cmd = app.add_subcommand("export", "Export a map for drawing");
  export_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}));
  export_cmd->add_option("file", file, "Map or representation JSON")->required();
  export_cmd->add_option("-o,--output", output, "Write the drawing here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInputError;
  }

  try {
    if (*check_map_cmd) return check_map(file, out);
    if (*check_matrix_cmd) return check_matrix(file, out);
    if (*realize_cmd) return realize(degree, ramification, output, out, err);
    if (*complete_cmd) {
      const RegularSkeleton skeleton = complete_to_regular(read_map_json(read_text_file(file)));
      emit(write_map_json(skeleton.map), output, out);
      return kExitTrue;
    }
    if (*label_cmd) return label(file, base_white, output, out);
    if (*passport_cmd) {
      const Representation rep = read_representation_json(read_text_file(file));
      out << format_passport(extract_passport(rep)) << '\n';
      return kExitTrue;
    }
    if (*monodromy_cmd) return monodromy(file, out);
    if (*oracle_cmd) {
      const bool realized = passport_oracle(parse_passport(passport_text, oracle_degree));
      out << (realized ? "realized" : "not realized") << '\n';
      return realized ? kExitTrue : kExitFalse;
    }
    if (*enumerate_cmd) return enumerate(max_edges, balanced_only, out, err);
    if (*export_cmd) return export_dot(format, file, output, out);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ramify::cli
