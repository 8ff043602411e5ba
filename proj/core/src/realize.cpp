#include "ramify/realize.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "ramify/balance.hpp"
#include "ramify/error.hpp"
#include "ramify/matching.hpp"
#include "ramify/planarity.hpp"

namespace ramify {
namespace {

void require_regular(const BipartiteMap& map, int n, const char* stage) {
  for (VertexId v : map.black_vertices()) {
    if (vertex_degree(map, v) != n) {
      throw InputError(stage, "black vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(vertex_degree(map, v)) + ", expected " +
                                  std::to_string(n));
    }
  }
  for (FaceId f = 0; f < map.face_count(); ++f) {
    if (face_degree(map, f) != n) {
      throw InputError(stage, "face " + std::to_string(f) + " has degree " +
                                  std::to_string(face_degree(map, f)) + ", expected " +
                                  std::to_string(n));
    }
  }
}

int wrap(int label, int n) { return ((label % n) + n) % n; }

std::vector<int> orbit_blocks(std::vector<int> blocks, const Permutation& p) {
  // Union-find over the points, then relabel each block by its minimum.
  const int d = static_cast<int>(blocks.size());
  std::vector<int> parent(blocks);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int x = 0; x < d; ++x) {
    const int a = find(x);
    const int b = find(p(x));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (int x = 0; x < d; ++x) blocks[x] = find(x);
  return blocks;
}

}  // namespace

RegularSkeleton complete_to_regular(const BipartiteMap& map) {
  if (!check_global(map)) throw InputError("complete_to_regular", "map is not globally balanced");
  const BalanceReport report = check_local_matching(map);
  if (!report.locally_balanced) {
    throw InputError("complete_to_regular", "map is not locally balanced: " + report.reason);
  }
  const CompletionInstance completion = completion_instance(map);
  const HallVerdict verdict = has_perfect_matching(completion.instance);
  if (!verdict.perfect) {
    throw InvariantError("complete_to_regular", "no perfect matching on a balanced map");
  }

  const RotationMap& rot = map.rotation();
  std::vector<Dart> alpha = rot.alpha_table();
  std::vector<Dart> sigma = rot.sigma_table();
  std::vector<Dart> sigma_inverse(sigma.size());
  for (Dart x = 0; x < rot.dart_count(); ++x) sigma_inverse[sigma[x]] = x;

  for (int dot = 0; dot < completion.instance.left_count; ++dot) {
    const FaceId f = completion.dot_face[dot];
    const VertexId v = map.black_vertices()[verdict.matching.partner[dot]];
    Dart corner = -1;
    for (Dart x : rot.face_darts(f)) {
      if (rot.vertex_of(x) == v && (corner < 0 || x < corner)) corner = x;
    }
    if (corner < 0) throw InvariantError("complete_to_regular", "matched black vertex is not on the face");
    // New black dart b goes just before `corner` around v; w is the leaf.
    const Dart b = static_cast<Dart>(alpha.size());
    const Dart w = b + 1;
    alpha.push_back(w);
    alpha.push_back(b);
    const Dart before = sigma_inverse[corner];
    sigma[before] = b;
    sigma.push_back(corner);
    sigma.push_back(w);
    sigma_inverse.push_back(before);
    sigma_inverse.push_back(w);
    sigma_inverse[corner] = b;
  }

  std::vector<Dart> black_reps;
  for (VertexId v : map.black_vertices()) black_reps.push_back(rot.vertex_darts(v).front());
  RegularSkeleton skeleton{BipartiteMap(RotationMap(std::move(alpha), std::move(sigma)), black_reps),
                           completion.regularity, rot.dart_count()};
  try {
    require_regular(skeleton.map, skeleton.n, "complete_to_regular");
  } catch (const InputError& e) {
    throw InvariantError("complete_to_regular", e.what());
  }
  return skeleton;
}

BipartiteMap erase_added_leaves(const BipartiteMap& map, int original_dart_count) {
  const RotationMap& rot = map.rotation();
  if (original_dart_count < 2 || original_dart_count > rot.dart_count() || original_dart_count % 2) {
    throw InputError("erase_added_leaves", "bad original dart count");
  }
  std::vector<Dart> alpha(original_dart_count);
  std::vector<Dart> sigma(original_dart_count);
  for (Dart x = 0; x < original_dart_count; ++x) {
    alpha[x] = rot.alpha(x);
    if (alpha[x] >= original_dart_count) {
      throw InputError("erase_added_leaves", "an original dart is paired with an added one");
    }
    Dart y = rot.sigma(x);
    while (y >= original_dart_count) y = rot.sigma(y);
    sigma[x] = y;
  }
  std::vector<Dart> black_reps;
  for (VertexId v : map.black_vertices()) {
    const Dart rep = rot.vertex_darts(v).front();
    if (rep < original_dart_count) black_reps.push_back(rep);
  }
  return BipartiteMap(RotationMap(std::move(alpha), std::move(sigma)), black_reps);
}

Representation label_regular(const RegularSkeleton& skeleton, std::optional<VertexId> base_white,
                             std::optional<std::uint64_t> shuffle_seed) {
  const BipartiteMap& map = skeleton.map;
  const RotationMap& rot = map.rotation();
  const int n = skeleton.n;
  if (n < 1) throw InputError("label_regular", "regularity must be positive");
  require_regular(map, n, "label_regular");
  const VertexId base = base_white.value_or(map.white_vertices().front());
  if (base < 0 || base >= rot.vertex_count() || map.color(base) != Color::kWhite) {
    throw InputError("label_regular", "base vertex " + std::to_string(base) + " is not white");
  }

  // Each black dart x says: label(white after x) = label(white at x) + 1.
  std::vector<std::vector<std::pair<VertexId, int>>> steps(rot.vertex_count());
  for (Dart x = 0; x < rot.dart_count(); ++x) {
    if (!map.is_black(x)) continue;
    const VertexId from = rot.vertex_of(rot.alpha(x));
    const VertexId to = rot.vertex_of(rot.alpha(rot.sigma(x)));
    steps[from].emplace_back(to, 1);
    steps[to].emplace_back(from, -1);
  }

  std::mt19937_64 rng(shuffle_seed.value_or(0));
  if (shuffle_seed) {
    for (auto& list : steps) std::shuffle(list.begin(), list.end(), rng);
  }
  std::vector<int> raw(rot.vertex_count(), 0);
  std::vector<bool> seen(rot.vertex_count(), false);
  seen[base] = true;
  std::vector<VertexId> frontier{base};
  while (!frontier.empty()) {
    std::size_t pick = 0;
    if (shuffle_seed) pick = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    const VertexId u = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    for (const auto& [v, delta] : steps[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      raw[v] = raw[u] + delta;
      frontier.push_back(v);
    }
  }

  std::vector<int> labels(rot.vertex_count(), 0);
  for (VertexId w : map.white_vertices()) {
    if (!seen[w]) throw InvariantError("label_regular", "white vertex " + std::to_string(w) + " unreached");
    labels[w] = wrap(raw[w], n) + 1;
  }
  for (VertexId u : map.white_vertices()) {
    for (const auto& [v, delta] : steps[u]) {
      if (wrap(labels[v] - labels[u] - delta, n) != 0) {
        throw InvariantError("label_regular", "label conflict between white vertices " +
                                                  std::to_string(u) + " and " + std::to_string(v));
      }
    }
  }

  Representation rep{map, n, std::move(labels), base, skeleton.original_dart_count};
  validate_representation(rep);
  return rep;
}

void validate_representation(const Representation& rep) {
  const BipartiteMap& map = rep.map;
  const RotationMap& rot = map.rotation();
  const int n = rep.label_count;
  const char* stage = "validate_representation";
  if (n < 1) throw InvariantError(stage, "label count must be positive");
  if (static_cast<int>(rep.labels.size()) != rot.vertex_count()) {
    throw InvariantError(stage, "one label per vertex expected");
  }
  if (map.face_count() != map.black_count()) {
    throw InvariantError(stage, "face count differs from black vertex count");
  }
  try {
    require_regular(map, n, stage);
  } catch (const InputError& e) {
    throw InvariantError(stage, e.what());
  }
  for (VertexId v = 0; v < rot.vertex_count(); ++v) {
    const int label = rep.labels[v];
    if (map.color(v) == Color::kBlack ? label != 0 : (label < 1 || label > n)) {
      throw InvariantError(stage, "vertex " + std::to_string(v) + " has label " + std::to_string(label));
    }
  }
  for (Dart x = 0; x < rot.dart_count(); ++x) {
    if (!map.is_black(x)) continue;
    const int here = rep.labels[rot.vertex_of(rot.alpha(x))];
    const int next = rep.labels[rot.vertex_of(rot.alpha(rot.sigma(x)))];
    if (next != here % n + 1) {
      throw InvariantError(stage, "labels do not increase around black vertex " +
                                      std::to_string(rot.vertex_of(x)));
    }
  }
  for (FaceId f = 0; f < rot.face_count(); ++f) {
    std::vector<int> seen(n + 1, 0);
    for (Dart x : rot.face_darts(f)) {
      if (!map.is_black(x) && ++seen[rep.labels[rot.vertex_of(x)]] > 1) {
        throw InvariantError(stage, "face " + std::to_string(f) + " repeats label " +
                                        std::to_string(rep.labels[rot.vertex_of(x)]));
      }
    }
  }
}

Representation make_representation(BipartiteMap map, std::vector<int> labels,
                                   int original_dart_count) {
  int n = 0;
  for (int label : labels) n = std::max(n, label);
  VertexId base = -1;
  for (VertexId w : map.white_vertices()) {
    if (labels.size() > static_cast<std::size_t>(w) && labels[w] == 1) {
      base = w;
      break;
    }
  }
  Representation rep{std::move(map), n, std::move(labels), base, original_dart_count};
  try {
    validate_representation(rep);
  } catch (const InvariantError& e) {
    throw InputError("representation", e.what());
  }
  return rep;
}

Permutation monodromy_product(const MonodromyWitness& witness) {
  Permutation product = Permutation::identity(witness.degree);
  for (const Permutation& p : witness.permutations) {
    product = kMonodromyAscending ? p.after(product) : product.after(p);
  }
  return product;
}

MonodromyWitness extract_monodromy(const Representation& rep) {
  const BipartiteMap& map = rep.map;
  const RotationMap& rot = map.rotation();
  const int d = rot.face_count();
  const char* stage = "extract_monodromy";
  MonodromyWitness witness;
  witness.degree = d;
  for (int label = 1; label <= rep.label_count; ++label) {
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 0);
    Partition expected;
    for (VertexId w : map.white_vertices()) {
      if (rep.labels[w] != label) continue;
      expected.push_back(vertex_degree(map, w));
      for (Dart u : rot.vertex_darts(w)) images[rot.face_of(u)] = rot.face_of(rot.sigma(u));
    }
    Permutation p;
    try {
      p = Permutation(std::move(images));
    } catch (const InputError&) {
      throw InvariantError(stage, "sheet action of label " + std::to_string(label) +
                                      " is not a permutation");
    }
    const int covered = std::accumulate(expected.begin(), expected.end(), 0);
    if (covered > d) {
      throw InvariantError(stage, "label " + std::to_string(label) + " covers more than d sheets");
    }
    expected.insert(expected.end(), d - covered, 1);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    if (p.cycle_type() != expected) {
      throw InvariantError(stage, "cycle type of sigma_" + std::to_string(label) +
                                      " does not match its partition");
    }
    witness.permutations.push_back(std::move(p));
    witness.partitions.push_back(std::move(expected));
  }
  if (!generates_transitive_group(witness.permutations, d)) {
    throw InvariantError(stage, "permutations do not act transitively on the sheets");
  }
  if (!monodromy_product(witness).is_identity()) {
    throw InvariantError(stage, "product of the permutations is not the identity");
  }
  return witness;
}

Realization realize_distribution(const RamificationDistribution& list) {
  list.validate();
  // Any failure past validation contradicts the theory; report which stage broke.
  auto stage = [](const char* name, auto&& body) {
    try {
      return body();
    } catch (const GuardError&) {
      throw;
    } catch (const Error& e) {
      throw InvariantError(std::string("realize_distribution/") + name, e.what());
    }
  };

  IncidenceMatrix matrix = stage("construct_matrix", [&] { return construct_matrix(list); });
  BipartiteGraph graph = stage("matrix_to_graph", [&] {
    BipartiteGraph g = matrix_to_graph(matrix);
    if (!g.connected()) throw InvariantError("matrix_to_graph", "graph is not connected");
    return g;
  });
  BipartiteMap skeleton = stage("embed_planar", [&] {
    EmbeddingResult embedded = embed_planar(graph);
    if (!embedded.planar()) throw InvariantError("embed_planar", "graph is not planar");
    return std::move(*embedded.map);
  });
  stage("balance", [&] {
    if (!check_global(skeleton)) throw InvariantError("check_global", "not globally balanced");
    if (!check_local_matching(skeleton).locally_balanced) {
      throw InvariantError("check_local_matching", "not locally balanced");
    }
    if (skeleton.black_count() <= kBruteForceBlackLimit &&
        !check_local_bruteforce(skeleton).locally_balanced) {
      throw InvariantError("check_local_bruteforce", "not locally balanced");
    }
    return 0;
  });
  RegularSkeleton regular = stage("complete_to_regular", [&] { return complete_to_regular(skeleton); });
  Representation rep = stage("label_regular", [&] { return label_regular(regular); });
  Passport passport = stage("extract_passport", [&] { return extract_passport(rep); });
  MonodromyWitness monodromy = stage("extract_monodromy", [&] { return extract_monodromy(rep); });

  stage("check_degrees", [&] {
    std::vector<int> critical;
    for (VertexId w : rep.map.white_vertices()) {
      if (vertex_degree(rep.map, w) > 1) critical.push_back(vertex_degree(rep.map, w));
    }
    std::vector<int> wanted = list.values;
    std::sort(critical.begin(), critical.end());
    std::sort(wanted.begin(), wanted.end());
    if (critical != wanted) {
      throw InvariantError("check_degrees", "critical white degrees differ from the input list");
    }
    if (!riemann_hurwitz_check(passport)) {
      throw InvariantError("check_degrees", "extracted passport fails the Riemann-Hurwitz sum");
    }
    return 0;
  });
  return Realization{std::move(matrix), std::move(graph),    std::move(skeleton), std::move(regular),
                     std::move(rep),    std::move(passport), std::move(monodromy)};
}

bool passport_oracle(const Passport& passport) {
  passport.validate();
  const int d = passport.degree;
  enforce_guard("passport_oracle", "degree", d, kOracleDegreeLimit);
  if (!riemann_hurwitz_check(passport)) return false;

  std::vector<Partition> classes;
  for (Partition p : passport.partitions) {
    std::sort(p.begin(), p.end(), std::greater<>());
    if (Passport::weight(p) > 0) classes.push_back(std::move(p));
  }
  if (classes.empty()) return d == 1;
  if (classes.size() == 1) return false;

  std::map<Partition, std::vector<Permutation>> by_type;
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation p(images);
    by_type[p.cycle_type()].push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));

  // State: product so far and the orbit blocks of the group generated so far.
  // The first factor is fixed up to conjugation; the last is forced.
  using State = std::pair<Permutation, std::vector<int>>;
  std::vector<int> singletons(d);
  std::iota(singletons.begin(), singletons.end(), 0);
  const Permutation& first = by_type[classes.front()].front();
  std::set<State> states{{first, orbit_blocks(singletons, first)}};
  for (std::size_t j = 1; j + 1 < classes.size(); ++j) {
    std::set<State> next;
    for (const auto& [product, blocks] : states) {
      for (const Permutation& q : by_type[classes[j]]) {
        next.emplace(q.after(product), orbit_blocks(blocks, q));
      }
    }
    states = std::move(next);
  }
  for (const auto& [product, blocks] : states) {
    const bool transitive = std::all_of(blocks.begin(), blocks.end(), [](int b) { return b == 0; });
    if (transitive && product.inverse().cycle_type() == classes.back()) return true;
  }
  return false;
}

}  // namespace ramify
