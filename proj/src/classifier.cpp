#include "tgk/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tgk/error.hpp"

namespace tgk {

std::string_view to_string(LeafKind kind) {
  switch (kind) {
    case LeafKind::S6: return "S6";
    case LeafKind::Simplex: return "Simplex";
    case LeafKind::SB: return "SB";
    case LeafKind::QT: return "QT";
  }
  return "Unknown";
}

DecompositionTree DecompositionTree::make_leaf(Leaf leaf) {
  DecompositionTree t;
  t.leaf = std::move(leaf);
  return t;
}

DecompositionTree DecompositionTree::make_node(GluingRecord record, DecompositionTree left, DecompositionTree right) {
  DecompositionTree t;
  t.record = std::move(record);
  t.left = std::make_shared<const DecompositionTree>(std::move(left));
  t.right = std::make_shared<const DecompositionTree>(std::move(right));
  return t;
}

int DecompositionTree::leaf_count() const { return is_leaf() ? 1 : left->leaf_count() + right->leaf_count(); }

int DecompositionTree::internal_count() const {
  return is_leaf() ? 0 : 1 + left->internal_count() + right->internal_count();
}

std::vector<const Leaf*> DecompositionTree::leaves() const {
  if (is_leaf()) return {&*leaf};
  auto out = left->leaves();
  auto more = right->leaves();
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

std::string DecompositionTree::summary() const {
  if (is_leaf() && leaf->kind == LeafKind::S6) return "S6";
  int qt = 0, sb = 0, s6 = 0;
  for (const Leaf* l : leaves()) {
    switch (l->kind) {
      case LeafKind::S6: ++s6; break;
      case LeafKind::SB: ++sb; break;
      default: ++qt; break;
    }
  }
  std::string out;
  auto add = [&](const char* name, int count) {
    if (count == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    out += "×" + std::to_string(count);
  };
  add("QT", qt);
  add("SB", sb);
  add("S6", s6);
  return out;
}

namespace {

// Moves vertex i of tg to position perm[i]; darts keep their ids.
TorusGraph renumber(const TorusGraph& tg, const std::vector<VertexId>& perm) {
  RotationTable t = tg.graph().table();
  std::vector<int> sigma(static_cast<std::size_t>(t.vertex_count));
  for (VertexId v = 0; v < t.vertex_count; ++v) {
    t.rotations[perm[v]] = tg.graph().darts_at(v);
    sigma[perm[v]] = tg.sigma(v);
  }
  return TorusGraph(RotationGraph::build(t), tg.axial_map(), std::move(sigma));
}

SumSite site_by_labels(const TorusGraph& a, VertexId p, const TorusGraph& b, VertexId q) {
  SumSite site{p, q, {-1, -1, -1}};
  for (int i = 0; i < 3; ++i) {
    for (DartId m : b.graph().darts_at(q)) {
      if (b.axial(m) == a.axial(a.graph().darts_at(p)[i])) site.matching[i] = m;
    }
    if (site.matching[i] == -1) throw Error(ErrorKind::InadmissibleSite, "labels at the gluing vertices differ");
  }
  return site;
}

}  // namespace

TorusGraph fold(const DecompositionTree& tree) {
  if (tree.is_leaf()) return tree.leaf->witness;
  const TorusGraph left = fold(*tree.left);
  const TorusGraph right = fold(*tree.right);
  const GluingRecord& rec = *tree.record;
  const SumResult sum = connected_sum(left, right, site_by_labels(left, rec.site.p, right, rec.site.q));
  std::vector<VertexId> perm(static_cast<std::size_t>(sum.graph.vertex_count()), -1);
  for (std::size_t v = 0; v < rec.left_map.size(); ++v)
    if (rec.left_map[v] != -1) perm[sum.record.left_map[v]] = rec.left_map[v];
  for (std::size_t v = 0; v < rec.right_map.size(); ++v)
    if (rec.right_map[v] != -1) perm[sum.record.right_map[v]] = rec.right_map[v];
  return renumber(sum.graph, perm);
}

SBParams normalize_sb_params(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  auto fail = [](const std::string& why) -> SBParams { throw Error(ErrorKind::NotSBShaped, why); };
  if (g.vertex_count() != 4) return fail("SB graphs have 4 vertices, got " + std::to_string(g.vertex_count()));

  // Per vertex: the single dart and the two parallel darts.
  struct Star {
    DartId single;
    std::array<DartId, 2> parallel;
  };
  std::array<Star, 4> stars{};
  for (VertexId v = 0; v < 4; ++v) {
    const auto& ds = g.darts_at(v);
    int found = 0;
    for (int i = 0; i < 3; ++i) {
      const DartId a = ds[(i + 1) % 3], b = ds[(i + 2) % 3];
      if (g.head(a) == g.head(b) && g.head(ds[i]) != g.head(a) && g.head(a) != v) {
        stars[v] = Star{ds[i], {a, b}};
        ++found;
      }
    }
    if (found != 1) return fail("vertex " + std::to_string(v) + " is not on exactly one double edge");
  }

  std::vector<SBParams> orbit;
  for (VertexId r = 0; r < 4; ++r) {
    for (int order = 0; order < 2; ++order) {
      const Star& s3 = stars[r];
      const DartId b_dart = s3.parallel[order];
      const DartId c_dart = s3.parallel[1 - order];
      const Matrix3 basis = Matrix3::from_rows(tg.axial(s3.single), tg.axial(b_dart), tg.axial(c_dart));
      const Integer det = basis.determinant();
      if (det != 1 && det != -1) continue;
      const Matrix3 inv = basis.unimodular_inverse();
      auto coords = [&](DartId d) { return inv.act_right(tg.axial(d)); };
      const LatticeCovector e1 = unit_covector(0), e2 = unit_covector(1), e3 = unit_covector(2);

      const VertexId p4 = g.head(b_dart);
      const VertexId p1 = g.head(s3.single);
      const Star& s4 = stars[p4];
      const Star& s1 = stars[p1];
      const VertexId p2 = g.head(s4.single);
      if (p1 == p4 || p2 != g.head(s1.parallel[0])) continue;
      bool ok = coords(g.reverse(b_dart)) == e2 && coords(g.reverse(c_dart)) == e3 && coords(s4.single) == e1;
      const LatticeCovector down = coords(g.reverse(s3.single));
      const LatticeCovector down2 = coords(g.reverse(s4.single));
      ok = ok && (down == e1 || down == -e1) && down2 == down;
      if (!ok) continue;
      const int eps = down == e1 ? 1 : -1;
      std::optional<Integer> a, b;
      bool top_ok = true;
      for (DartId d : s1.parallel) {
        const LatticeCovector x = coords(d);
        top_ok = top_ok && coords(g.reverse(d)) == x;
        if (x[1] == 1 && x[2] == 0) a = x[0];
        if (x[1] == 0 && x[2] == 1) b = x[0];
      }
      if (!top_ok || !a || !b) continue;
      orbit.push_back(SBParams{eps, *a, *b});
    }
  }
  if (orbit.empty()) return fail("labels do not match the S4-bundle template in any basis");
  for (const auto& p : orbit) {
    if (p.eps != orbit.front().eps) {
      throw Error(ErrorKind::InternalInvariantViolation, "sign of the single-edge label is not basis independent");
    }
  }
  return *std::min_element(orbit.begin(), orbit.end(), [](const SBParams& x, const SBParams& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
}

std::optional<Leaf> recognize_basic(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  if (g.vertex_count() == 2) return Leaf{LeafKind::S6, tg, std::nullopt};
  if (g.vertex_count() == 4) {
    if (!g.has_multiple_edges()) return Leaf{LeafKind::Simplex, tg, std::nullopt};
    try {
      return Leaf{LeafKind::SB, tg, normalize_sb_params(tg)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSBShaped) throw;
      return std::nullopt;
    }
  }
  if (!g.has_multiple_edges() && is_k_connected(g, 3)) return Leaf{LeafKind::QT, tg, std::nullopt};
  return std::nullopt;
}

namespace {

// Part of a split that holds the original vertex v.
int side_of(const SplitResult& parts, VertexId v) {
  const auto& lm = parts.record.left_map;
  return std::find(lm.begin(), lm.end(), v) != lm.end() ? 0 : 1;
}

const TorusGraph& part(const SplitResult& parts, int side) { return side == 0 ? parts.left : parts.right; }

const std::vector<VertexId>& part_map(const SplitResult& parts, int side) {
  return side == 0 ? parts.record.left_map : parts.record.right_map;
}

VertexId index_in(const std::vector<VertexId>& map, VertexId original) {
  const auto it = std::find(map.begin(), map.end(), original);
  return it == map.end() ? -1 : static_cast<VertexId>(it - map.begin());
}

EdgeId edge_between(const RotationGraph& g, VertexId u, VertexId v) {
  for (DartId d : g.darts_at(u))
    if (g.head(d) == v) return g.edge_of(d);
  return -1;
}

std::optional<Reduction> try_sb_split(const TorusGraph& tg, const std::array<EdgeId, 3>& cut, VertexId inside) {
  try {
    SplitResult parts = split(tg, cut);
    const int side = side_of(parts, inside);
    const TorusGraph& sb = part(parts, side);
    if (sb.vertex_count() != 4) return std::nullopt;
    (void)normalize_sb_params(sb);
    return Reduction{std::move(parts), side};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotACut && e.kind() != ErrorKind::InvalidCap && e.kind() != ErrorKind::NotSBShaped) {
      throw;
    }
    return std::nullopt;
  }
}

}  // namespace

Reduction reduce_multi_edge(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  std::optional<std::pair<VertexId, VertexId>> pair;
  for (VertexId v = 0; v < g.vertex_count() && !pair; ++v) {
    const auto& ds = g.darts_at(v);
    for (int i = 0; i < 3 && !pair; ++i) {
      for (int j = i + 1; j < 3 && !pair; ++j) {
        const VertexId w = g.head(ds[i]);
        if (w == g.head(ds[j]) && w != v) pair = std::minmax(v, w);
      }
    }
  }
  if (!pair) throw Error(ErrorKind::NoMultipleEdge, "graph has no double edge");
  if (g.vertex_count() <= 4) throw Error(ErrorKind::InvalidInput, "multiple-edge reduction needs at least 6 vertices");
  const auto [p, q] = *pair;

  auto third = [&](VertexId v, VertexId partner) {
    for (DartId d : g.darts_at(v))
      if (g.head(d) != partner) return d;
    throw Error(ErrorKind::InternalInvariantViolation, "vertex " + std::to_string(v) + " has a triple edge");
  };
  // Block {x, y, z}: the double edge x=y and z, the third neighbour of x.
  for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
    const DartId xz = third(x, y);
    const DartId yw = third(y, x);
    const VertexId z = g.head(xz);
    std::array<EdgeId, 3> cut{g.edge_of(yw), -1, -1};
    int k = 1;
    for (DartId d : g.darts_at(z))
      if (d != g.reverse(xz)) cut[k++] = g.edge_of(d);
    if (auto r = try_sb_split(tg, cut, x)) return std::move(*r);
  }
  throw Error(ErrorKind::InternalInvariantViolation,
              "no admissible split around the double edge " + std::to_string(p) + "=" + std::to_string(q));
}

SingularReduction reduce_singular_facet(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  if (is_k_connected(g, 3)) throw Error(ErrorKind::Already3Connected, "graph is 3-connected");
  if (g.has_multiple_edges()) throw Error(ErrorKind::InvalidInput, "singular-facet reduction needs a simple graph");

  const int m = g.edge_count();
  std::vector<char> removed_edge(static_cast<std::size_t>(m), 0);
  auto sides_without = [&](EdgeId e, EdgeId f) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> stack{0};
    side[0] = 0;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : g.darts_at(v)) {
        if (g.edge_of(d) == e || g.edge_of(d) == f || side[g.head(d)] != -1) continue;
        side[g.head(d)] = 0;
        stack.push_back(g.head(d));
      }
    }
    for (int& s : side)
      if (s == -1) s = 1;
    return side;
  };

  bool any_cut = false;
  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f = e + 1; f < m; ++f) {
      const auto side = sides_without(e, f);
      if (std::count(side.begin(), side.end(), 1) == 0) continue;
      any_cut = true;

      // The two facets through both cut edges; the larger is the singular facet.
      const auto [e1, e2] = g.facets_of_edge(g.edge_dart(e));
      const auto [f1, f2] = g.facets_of_edge(g.edge_dart(f));
      std::vector<FacetId> common;
      for (FacetId a : {e1, e2})
        if (a == f1 || a == f2) common.push_back(a);
      if (common.size() != 2) {
        throw Error(ErrorKind::InternalInvariantViolation, "2-edge cut does not lie on two common facets");
      }
      const auto size_of = [&](FacetId h) { return static_cast<int>(g.facets()[h].boundary.size()); };
      const FacetId singular = size_of(common[0]) >= size_of(common[1]) ? common[0] : common[1];
      if (size_of(singular) < 6) {
        throw Error(ErrorKind::InternalInvariantViolation,
                    "singular facet " + std::to_string(singular) + " has only " + std::to_string(size_of(singular)) +
                        " vertices");
      }

      for (int x_side : {0, 1}) {
        for (int which : {0, 1}) {
          // e_in = p-r goes into the SB piece, f_out = q-s is cut in the first stage.
          const EdgeId e_in = which == 0 ? e : f;
          const EdgeId f_out = which == 0 ? f : e;
          DartId pr = g.edge_dart(e_in);
          if (side[g.origin(pr)] != x_side) pr = g.reverse(pr);
          DartId qs = g.edge_dart(f_out);
          if (side[g.origin(qs)] != x_side) qs = g.reverse(qs);
          const VertexId p = g.origin(pr), r = g.head(pr), s = g.head(qs);

          std::array<EdgeId, 3> cut1{f_out, -1, -1};
          int k = 1;
          for (DartId d : g.darts_at(p))
            if (d != pr) cut1[k++] = g.edge_of(d);
          std::optional<SplitResult> outer;
          try {
            outer = split(tg, cut1);
          } catch (const Error& err) {
            if (err.kind() != ErrorKind::NotACut && err.kind() != ErrorKind::InvalidCap) throw;
            continue;
          }
          const int rest_side = side_of(*outer, p);
          const TorusGraph& rest = part(*outer, rest_side);
          const auto& rest_map = part_map(*outer, rest_side);
          const VertexId rp = index_in(rest_map, p), rr = index_in(rest_map, r), rs = index_in(rest_map, s);
          const VertexId cap = rest.vertex_count() - 1;
          const RotationGraph& rg = rest.graph();
          std::array<EdgeId, 3> cut2{edge_between(rg, rp, rr), -1, -1};
          k = 1;
          for (DartId d : rg.darts_at(rs))
            if (rg.head(d) != cap) cut2[k++] = rg.edge_of(d);
          if (k != 3 || cut2[0] == -1) continue;
          auto inner = try_sb_split(rest, cut2, rp);
          if (!inner) continue;
          return SingularReduction{Reduction{std::move(*outer), rest_side}, std::move(*inner), singular,
                                   size_of(singular)};
        }
      }
    }
  }
  if (!any_cut) throw Error(ErrorKind::InternalInvariantViolation, "graph is not 3-connected but has no 2-edge cut");
  throw Error(ErrorKind::InternalInvariantViolation, "no 2-edge cut admits the SB extraction");
}

namespace {

Leaf sb_leaf(const TorusGraph& tg) { return Leaf{LeafKind::SB, tg, normalize_sb_params(tg)}; }

DecompositionTree classify_oriented(const TorusGraph& tg);

DecompositionTree node_with_sb(const Reduction& red, DecompositionTree other) {
  DecompositionTree sb = DecompositionTree::make_leaf(sb_leaf(part(red.parts, red.sb_side)));
  return red.sb_side == 0 ? DecompositionTree::make_node(red.parts.record, std::move(sb), std::move(other))
                          : DecompositionTree::make_node(red.parts.record, std::move(other), std::move(sb));
}

DecompositionTree classify_oriented(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  if (g.vertex_count() <= 4) {
    auto leaf = recognize_basic(tg);
    if (!leaf) throw Error(ErrorKind::InternalInvariantViolation, "4-vertex graph is neither K4 nor SB-shaped");
    return DecompositionTree::make_leaf(std::move(*leaf));
  }
  if (g.has_multiple_edges()) {
    const Reduction red = reduce_multi_edge(tg);
    return node_with_sb(red, classify_oriented(part(red.parts, 1 - red.sb_side)));
  }
  if (!is_k_connected(g, 3)) {
    const SingularReduction red = reduce_singular_facet(tg);
    const int rest_side = red.outer.sb_side;
    DecompositionTree middle = node_with_sb(red.inner, classify_oriented(part(red.inner.parts, 1 - red.inner.sb_side)));
    DecompositionTree other = classify_oriented(part(red.outer.parts, 1 - rest_side));
    return rest_side == 0 ? DecompositionTree::make_node(red.outer.parts.record, std::move(middle), std::move(other))
                          : DecompositionTree::make_node(red.outer.parts.record, std::move(other), std::move(middle));
  }
  return DecompositionTree::make_leaf(Leaf{LeafKind::QT, tg, std::nullopt});
}

void certify(const DecompositionTree& tree) {
  for (const Leaf* leaf : tree.leaves()) {
    const RotationGraph& g = leaf->witness.graph();
    bool ok = true;
    switch (leaf->kind) {
      case LeafKind::S6: ok = g.vertex_count() == 2; break;
      case LeafKind::Simplex: ok = g.vertex_count() == 4 && !g.has_multiple_edges(); break;
      case LeafKind::SB: ok = leaf->sb && normalize_sb_params(leaf->witness) == *leaf->sb; break;
      case LeafKind::QT: ok = !g.has_multiple_edges() && is_k_connected(g, 3); break;
    }
    if (!ok) throw Error(ErrorKind::InternalInvariantViolation, std::string(to_string(leaf->kind)) + " leaf fails certification");
  }
}

}  // namespace

DecompositionTree classify(const TorusGraph& input, const ClassifyOptions& options) {
  const auto diag = validate_torus_graph(input);
  if (!diag) throw Error(ErrorKind::InvalidInput, "not a torus graph: " + diag.messages.front());
  if (auto nice = validate_nice(input.graph()); !nice) {
    throw Error(ErrorKind::InvalidInput, "not a manifold with faces: " + nice.messages.front());
  }
  const TorusGraph tg = input.oriented() ? input : synthesize_orientation(input);
  DecompositionTree tree = classify_oriented(tg);
  certify(tree);
  if (options.verify) {
    int leaf_vertices = 0;
    for (const Leaf* leaf : tree.leaves()) leaf_vertices += leaf->witness.vertex_count();
    if (leaf_vertices != tg.vertex_count() + 2 * tree.internal_count()) {
      throw Error(ErrorKind::InternalInvariantViolation, "leaf vertex count does not balance");
    }
    if (!is_equivalent(fold(tree), tg, options.mode)) {
      throw Error(ErrorKind::InternalInvariantViolation, "folded decomposition is not equivalent to the input");
    }
  }
  return tree;
}

namespace {

std::int64_t det_small(const SmallVector& a, const SmallVector& b, const SmallVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) + c[0] * (a[1] * b[2] - a[2] * b[1]);
}

}  // namespace

void for_each_characteristic(const RotationGraph& g, const EnumerateOptions& options,
                             const std::function<bool(std::span<const SmallVector>)>& visit) {
  if (options.bound < 0 || options.bound > 100000) {
    throw Error(ErrorKind::InvalidInput, "bound must lie in 0..100000");
  }
  if (options.shards < 1 || options.shard < 0 || options.shard >= options.shards) {
    throw Error(ErrorKind::InvalidInput, "shard index must lie in 0..shards-1");
  }
  const std::int64_t bound = options.bound;
  std::vector<SmallVector> candidates;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z)
        if (std::gcd(std::gcd(x, y), z) == 1) candidates.push_back({x, y, z});
  if (candidates.empty()) return;

  // Facets in breadth-first order from vertex 0, so vertex checks fire early.
  const int nf = g.facet_count();
  std::vector<FacetId> order;
  std::vector<char> placed(static_cast<std::size_t>(nf), 0);
  for (VertexId v = 0; static_cast<int>(order.size()) < nf; v = (v + 1) % g.vertex_count()) {
    for (FacetId f : g.facets_at(v)) {
      if (!placed[f] && (order.empty() || std::any_of(g.facets_at(v).begin(), g.facets_at(v).end(),
                                                      [&](FacetId h) { return placed[h]; }))) {
        placed[f] = 1;
        order.push_back(f);
      }
    }
  }
  std::vector<int> position(static_cast<std::size_t>(nf));
  for (int i = 0; i < nf; ++i) position[order[i]] = i;
  std::vector<std::vector<VertexId>> checks(static_cast<std::size_t>(nf));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto fs = g.facets_at(v);
    checks[std::max({position[fs[0]], position[fs[1]], position[fs[2]]})].push_back(v);
  }

  std::vector<SmallVector> values(static_cast<std::size_t>(nf));
  std::vector<std::size_t> choice(static_cast<std::size_t>(nf), 0);
  const std::size_t k = candidates.size();
  bool running = true;
  auto consistent = [&](int depth) {
    for (VertexId v : checks[depth]) {
      const auto fs = g.facets_at(v);
      const auto d = det_small(values[fs[0]], values[fs[1]], values[fs[2]]);
      if (d != 1 && d != -1) return false;
    }
    return true;
  };
  std::function<void(int)> descend = [&](int depth) {
    if (!running) return;
    if (depth == nf) {
      running = visit(values);
      return;
    }
    for (std::size_t i = 0; i < k && running; ++i) {
      choice[depth] = i;
      if (depth == 1 && static_cast<int>((choice[0] * k + i) % static_cast<std::size_t>(options.shards)) != options.shard) {
        continue;
      }
      values[order[depth]] = candidates[i];
      if (consistent(depth)) descend(depth + 1);
    }
  };
  descend(0);
}

void enumerate_characteristic(const RotationGraph& g, const EnumerateOptions& options,
                              const std::function<bool(const CharacteristicData&)>& visit) {
  if (auto nice = validate_nice(g); !nice) throw Error(ErrorKind::NotNice, nice.messages.front());
  std::set<std::vector<LatticeVector>> seen_values;
  std::map<std::vector<LatticeCovector>, std::vector<TorusGraph>> seen_graphs;

  for_each_characteristic(g, options, [&](std::span<const SmallVector> raw) {
    CharacteristicData lam;
    lam.values.reserve(raw.size());
    for (const auto& v : raw) lam.values.emplace_back(v[0], v[1], v[2]);
    if (!options.dedup) return visit(lam);

    const bool lifts = *options.dedup == EquivalenceMode::sign_lifts;
    if (lifts) {
      for (auto& v : lam.values) v = sign_normalized(v);
      if (!seen_values.insert(lam.values).second) return true;
    }
    TorusGraph tg = from_characteristic(g, lam);
    std::vector<LatticeCovector> key;
    for (const auto& a : tg.axial_map()) key.push_back(lifts ? sign_normalized(a) : a);
    std::sort(key.begin(), key.end());
    auto& bucket = seen_graphs[key];
    for (const auto& other : bucket)
      if (is_equivalent(tg, other, *options.dedup)) return true;
    bucket.push_back(std::move(tg));
    return visit(lam);
  });
}

std::vector<CharacteristicData> enumerate_characteristic(const RotationGraph& g, const EnumerateOptions& options) {
  std::vector<CharacteristicData> out;
  enumerate_characteristic(g, options, [&](const CharacteristicData& lam) {
    out.push_back(lam);
    return true;
  });
  return out;
}

}  // namespace tgk
