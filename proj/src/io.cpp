#include "tgk/io.hpp"

#include <limits>
#include <regex>
#include <sstream>

#include "tgk/error.hpp"

namespace tgk::io {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int small_int(const Json& j) {
  if (!j.is_number_integer()) parse_fail("expected an integer, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) parse_fail("index out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array, got " + j.dump());
  std::vector<int> out;
  for (const auto& x : j) out.push_back(small_int(x));
  return out;
}

template <typename Tag>
LatticeElement<Tag> element_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) parse_fail("lattice elements are arrays of 3 integers, got " + j.dump());
  return LatticeElement<Tag>(integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2]));
}

template <typename Tag>
Json element_to_json(const LatticeElement<Tag>& v) {
  return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(x));
  }
  return Json(x.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, digits)) parse_fail("not a decimal integer: \"" + s + "\"");
    return Integer(s);
  }
  parse_fail("expected an integer, got " + j.dump());
}

Json to_json(const LatticeVector& v) { return element_to_json(v); }
Json to_json(const LatticeCovector& v) { return element_to_json(v); }
LatticeVector vector_from_json(const Json& j) { return element_from_json<VectorTag>(j); }
LatticeCovector covector_from_json(const Json& j) { return element_from_json<CovectorTag>(j); }

Json to_json(const RotationGraph& g) {
  const RotationTable& t = g.table();
  Json rotations = Json::array();
  for (const auto& r : t.rotations) rotations.push_back({r[0], r[1], r[2]});
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  return Json{{"vertices", t.vertex_count}, {"rotations", rotations}, {"edges", edges}};
}

RotationGraph graph_from_json(const Json& j) {
  RotationTable t = guarded([&] {
    RotationTable table;
    table.vertex_count = small_int(field(j, "vertices"));
    for (const auto& r : field(j, "rotations")) {
      const auto darts = int_list(r);
      if (darts.size() != 3) {
        throw Error(ErrorKind::NotTrivalent, "vertex " + std::to_string(table.rotations.size()) + " lists " +
                                                 std::to_string(darts.size()) + " darts");
      }
      table.rotations.push_back({darts[0], darts[1], darts[2]});
    }
    for (const auto& e : field(j, "edges")) {
      const auto pair = int_list(e);
      if (pair.size() != 2) parse_fail("edges are pairs of darts, got " + e.dump());
      table.edges.emplace_back(pair[0], pair[1]);
    }
    return table;
  });
  return RotationGraph::build(t);
}

Json to_json(const TorusGraph& tg) {
  Json j = to_json(tg.graph());
  Json axial = Json::object();
  for (DartId d = 0; d < tg.graph().dart_count(); ++d) axial[std::to_string(d)] = to_json(tg.axial(d));
  j["axial"] = axial;
  if (tg.oriented()) {
    Json sigma = Json::object();
    for (VertexId v = 0; v < tg.vertex_count(); ++v) sigma[std::to_string(v)] = tg.sigma(v);
    j["sigma"] = sigma;
  }
  return j;
}

namespace {

int key_index(const std::string& key, int limit, const char* what) {
  static const std::regex digits("[0-9]+");
  if (!std::regex_match(key, digits)) parse_fail(std::string(what) + " key \"" + key + "\" is not an index");
  const long v = std::stol(key);
  if (v >= limit) parse_fail(std::string(what) + " key " + key + " out of range");
  return static_cast<int>(v);
}

}  // namespace

TorusGraph torus_graph_from_json(const Json& j) {
  RotationGraph g = graph_from_json(j);
  return guarded([&] {
    std::vector<std::optional<LatticeCovector>> labels(static_cast<std::size_t>(g.dart_count()));
    const Json& axial = field(j, "axial");
    if (!axial.is_object()) parse_fail("\"axial\" must be an object keyed by dart id");
    for (const auto& [key, value] : axial.items()) labels[key_index(key, g.dart_count(), "axial")] = covector_from_json(value);
    std::vector<LatticeCovector> axial_map;
    for (DartId d = 0; d < g.dart_count(); ++d) {
      if (!labels[d]) parse_fail("no axial label for dart " + std::to_string(d));
      axial_map.push_back(*labels[d]);
    }
    std::optional<std::vector<int>> sigma;
    if (j.contains("sigma")) {
      const Json& s = j.at("sigma");
      if (!s.is_object()) parse_fail("\"sigma\" must be an object keyed by vertex id");
      sigma.emplace(static_cast<std::size_t>(g.vertex_count()), 0);
      for (const auto& [key, value] : s.items()) (*sigma)[key_index(key, g.vertex_count(), "sigma")] = small_int(value);
      for (int x : *sigma)
        if (x != 1 && x != -1) parse_fail("sigma needs +1 or -1 on every vertex");
    }
    return TorusGraph(std::move(g), std::move(axial_map), std::move(sigma));
  });
}

Json to_json(const CharacteristicData& lam) {
  Json out = Json::array();
  for (const auto& v : lam.values) out.push_back(to_json(v));
  return out;
}

CharacteristicData characteristic_from_json(const Json& j) {
  return guarded([&] {
    const Json& arr = j.is_object() ? field(j, "lambda") : j;
    if (!arr.is_array()) parse_fail("characteristic data is an array of facet vectors");
    CharacteristicData lam;
    for (const auto& v : arr) lam.values.push_back(vector_from_json(v));
    return lam;
  });
}

Json to_json(const GluingRecord& r) {
  Json labels = Json::array();
  for (const auto& l : r.labels) labels.push_back(to_json(l));
  return Json{{"p", r.site.p},
              {"q", r.site.q},
              {"matching", r.site.matching},
              {"joins", r.joins},
              {"labels", labels},
              {"sigma_p", r.sigma_p},
              {"sigma_q", r.sigma_q},
              {"left_map", r.left_map},
              {"right_map", r.right_map}};
}

GluingRecord record_from_json(const Json& j) {
  return guarded([&] {
    GluingRecord r;
    r.site.p = small_int(field(j, "p"));
    r.site.q = small_int(field(j, "q"));
    const auto matching = int_list(field(j, "matching"));
    const auto joins = int_list(field(j, "joins"));
    const Json& labels = field(j, "labels");
    if (matching.size() != 3 || joins.size() != 3 || !labels.is_array() || labels.size() != 3) {
      parse_fail("gluing record needs three matched darts, joins and labels");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      r.site.matching[i] = matching[i];
      r.joins[i] = joins[i];
      r.labels[i] = covector_from_json(labels[i]);
    }
    r.sigma_p = small_int(field(j, "sigma_p"));
    r.sigma_q = small_int(field(j, "sigma_q"));
    r.left_map = int_list(field(j, "left_map"));
    r.right_map = int_list(field(j, "right_map"));
    return r;
  });
}

Json to_json(const Leaf& leaf) {
  Json j{{"kind", std::string(to_string(leaf.kind))}, {"witness", to_json(leaf.witness)}};
  if (leaf.sb) j["params"] = Json{{"eps", leaf.sb->eps}, {"a", to_json(leaf.sb->a)}, {"b", to_json(leaf.sb->b)}};
  if (leaf.kind == LeafKind::S6) {
    Json basis = Json::array();
    for (DartId d : leaf.witness.graph().darts_at(0)) basis.push_back(to_json(leaf.witness.axial(d)));
    j["basis"] = basis;
  }
  return j;
}

Leaf leaf_from_json(const Json& j) {
  return guarded([&] {
    const auto kind_name = field(j, "kind").get<std::string>();
    std::optional<LeafKind> kind;
    for (LeafKind k : {LeafKind::S6, LeafKind::Simplex, LeafKind::SB, LeafKind::QT})
      if (to_string(k) == kind_name) kind = k;
    if (!kind) parse_fail("unknown leaf kind \"" + kind_name + "\"");
    Leaf leaf{*kind, torus_graph_from_json(field(j, "witness")), std::nullopt};
    if (j.contains("params")) {
      const Json& p = j.at("params");
      leaf.sb = SBParams{small_int(field(p, "eps")), integer_from_json(field(p, "a")), integer_from_json(field(p, "b"))};
    }
    return leaf;
  });
}

Json to_json(const DecompositionTree& tree) {
  if (tree.is_leaf()) return Json{{"leaf", to_json(*tree.leaf)}};
  return Json{{"node", {{"record", to_json(*tree.record)}, {"left", to_json(*tree.left)}, {"right", to_json(*tree.right)}}}};
}

DecompositionTree tree_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_object() && j.contains("leaf")) return DecompositionTree::make_leaf(leaf_from_json(j.at("leaf")));
    const Json& node = field(j, "node");
    return DecompositionTree::make_node(record_from_json(field(node, "record")), tree_from_json(field(node, "left")),
                                        tree_from_json(field(node, "right")));
  });
}

Json to_json(const Isomorphism& iso) { return Json{{"vertex_map", iso.vertex_map}, {"dart_map", iso.dart_map}}; }

std::string tree_to_dot(const DecompositionTree& tree) {
  std::ostringstream os;
  int counter = 0;
  auto emit = [&](auto&& self, const DecompositionTree& t) -> int {
    const int id = counter++;
    if (t.is_leaf()) {
      os << "  n" << id << " [shape=box,label=\"" << to_string(t.leaf->kind);
      if (t.leaf->sb) os << "(" << t.leaf->sb->eps << "," << t.leaf->sb->a << "," << t.leaf->sb->b << ")";
      os << " V=" << t.leaf->witness.vertex_count() << "\"];\n";
      return id;
    }
    os << "  n" << id << " [label=\"#\"];\n";
    const int l = self(self, *t.left);
    const int r = self(self, *t.right);
    os << "  n" << id << " -> n" << l << ";\n  n" << id << " -> n" << r << ";\n";
    return id;
  };
  os << "digraph decomposition {\n";
  emit(emit, tree);
  os << "}\n";
  return os.str();
}

}  // namespace tgk::io
