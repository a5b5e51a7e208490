#include "tgk/embedded_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tgk/error.hpp"

namespace tgk {

RotationGraph RotationGraph::build(const RotationTable& table) {
  const int n = table.vertex_count;
  if (n <= 0) throw Error(ErrorKind::MalformedTable, "graph needs at least one vertex");
  if (static_cast<int>(table.rotations.size()) != n) {
    throw Error(ErrorKind::MalformedTable, "expected " + std::to_string(n) + " rotations, got " +
                                               std::to_string(table.rotations.size()));
  }
  const int darts = 3 * n;
  RotationGraph g;
  g.table_ = table;
  g.rotations_ = table.rotations;
  g.edges_ = table.edges;
  g.origin_.assign(darts, -1);
  g.slot_.assign(darts, -1);
  g.reverse_.assign(darts, -1);
  g.edge_of_.assign(darts, -1);

  for (VertexId v = 0; v < n; ++v) {
    for (int i = 0; i < 3; ++i) {
      const DartId d = table.rotations[v][i];
      if (d < 0 || d >= darts) {
        throw Error(ErrorKind::NotTrivalent, "dart " + std::to_string(d) + " at vertex " + std::to_string(v) +
                                                 " outside 0.." + std::to_string(darts - 1));
      }
      if (g.origin_[d] != -1) throw Error(ErrorKind::MalformedTable, "dart " + std::to_string(d) + " listed twice");
      g.origin_[d] = v;
      g.slot_[d] = i;
    }
  }
  if (static_cast<int>(table.edges.size()) * 2 != darts) {
    throw Error(ErrorKind::NotTrivalent, std::to_string(table.edges.size()) + " edges cannot pair " +
                                             std::to_string(darts) + " darts");
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(table.edges.size()); ++e) {
    const auto [a, b] = table.edges[e];
    if (a < 0 || a >= darts || b < 0 || b >= darts || a == b) {
      throw Error(ErrorKind::MalformedTable, "bad edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    if (g.reverse_[a] != -1 || g.reverse_[b] != -1) {
      throw Error(ErrorKind::MalformedTable, "dart paired twice in edge " + std::to_string(e));
    }
    g.reverse_[a] = b;
    g.reverse_[b] = a;
    g.edge_of_[a] = e;
    g.edge_of_[b] = e;
  }

  // Connectivity by a sweep over darts.
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : g.rotations_[v]) {
      const VertexId w = g.head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorKind::Disconnected, std::to_string(n - reached) + " vertices unreachable from 0");

  g.facet_of_.assign(darts, -1);
  for (DartId start = 0; start < darts; ++start) {
    if (g.facet_of_[start] != -1) continue;
    Facet f;
    const auto id = static_cast<FacetId>(g.facets_.size());
    DartId d = start;
    do {
      g.facet_of_[d] = id;
      f.boundary.push_back(d);
      d = g.face_successor(d);
    } while (d != start);
    g.facets_.push_back(std::move(f));
  }
  const int euler = n - g.edge_count() + g.facet_count();
  if (euler != 2) {
    throw Error(ErrorKind::NotSphere, "V - E + F = " + std::to_string(n) + " - " + std::to_string(g.edge_count()) +
                                          " + " + std::to_string(g.facet_count()) + " = " + std::to_string(euler));
  }
  return g;
}

std::array<FacetId, 3> RotationGraph::facets_at(VertexId v) const {
  const auto& r = rotations_[v];
  return {facet_of_[r[0]], facet_of_[r[1]], facet_of_[r[2]]};
}

std::vector<VertexId> RotationGraph::facet_vertices(FacetId f) const {
  std::vector<VertexId> out;
  out.reserve(facets_[f].boundary.size());
  for (DartId d : facets_[f].boundary) out.push_back(origin_[d]);
  return out;
}

bool RotationGraph::has_multiple_edges() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [a, b] : edges_) {
    auto key = std::minmax(origin_[a], origin_[b]);
    if (key.first == key.second || !seen.insert(key).second) return true;
  }
  return false;
}

RotationGraph RotationGraph::mirrored() const {
  RotationTable t = table_;
  for (auto& r : t.rotations) std::swap(r[1], r[2]);
  return build(t);
}

Diagnostics validate_nice(const RotationGraph& g) {
  Diagnostics diag;
  if (g.vertex_count() < 2) diag.fail("a manifold with faces needs at least two vertices");
  for (FacetId f = 0; f < g.facet_count(); ++f) {
    auto verts = g.facet_vertices(f);
    std::sort(verts.begin(), verts.end());
    const auto dup = std::adjacent_find(verts.begin(), verts.end());
    if (dup != verts.end()) {
      diag.fail("facet " + std::to_string(f) + " passes through vertex " + std::to_string(*dup) +
                " more than once (self-intersecting boundary)");
    }
    for (DartId d : g.facets()[f].boundary) {
      if (g.facet_of(g.reverse(d)) == f) {
        diag.fail("facet " + std::to_string(f) + " meets itself across edge " + std::to_string(g.edge_of(d)));
        break;
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto fs = g.facets_at(v);
    if (fs[0] == fs[1] || fs[1] == fs[2] || fs[0] == fs[2]) {
      diag.fail("vertex " + std::to_string(v) + " does not lie on three distinct facets");
    }
  }
  return diag;
}

FacePoset::FacePoset(std::vector<Face> faces) : faces_(std::move(faces)) {
  for (auto& f : faces_) {
    std::sort(f.vertices.begin(), f.vertices.end());
    std::sort(f.edges.begin(), f.edges.end());
  }
  std::sort(faces_.begin(), faces_.end());
}

std::array<int, 5> FacePoset::rank_counts() const {
  std::array<int, 5> counts{};
  for (const auto& f : faces_) ++counts[static_cast<std::size_t>(f.dimension + 1)];
  return counts;
}

bool FacePoset::precedes(std::size_t a, std::size_t b) const {
  const Face& x = faces_[a];
  const Face& y = faces_[b];
  if (x.dimension > y.dimension) return false;
  return std::includes(y.vertices.begin(), y.vertices.end(), x.vertices.begin(), x.vertices.end()) &&
         std::includes(y.edges.begin(), y.edges.end(), x.edges.begin(), x.edges.end());
}

FacePoset face_poset(const RotationGraph& g) {
  std::vector<Face> faces;
  faces.push_back(Face{-1, {}, {}});
  for (VertexId v = 0; v < g.vertex_count(); ++v) faces.push_back(Face{0, {v}, {}});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    faces.push_back(Face{1, {g.origin(d), g.head(d)}, {e}});
  }
  for (FacetId f = 0; f < g.facet_count(); ++f) {
    Face face{2, g.facet_vertices(f), {}};
    for (DartId d : g.facets()[f].boundary) face.edges.push_back(g.edge_of(d));
    std::sort(face.vertices.begin(), face.vertices.end());
    face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()), face.vertices.end());
    faces.push_back(std::move(face));
  }
  Face whole{3, {}, {}};
  whole.vertices.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(whole.vertices.begin(), whole.vertices.end(), 0);
  whole.edges.resize(static_cast<std::size_t>(g.edge_count()));
  std::iota(whole.edges.begin(), whole.edges.end(), 0);
  faces.push_back(std::move(whole));
  return FacePoset(std::move(faces));
}

bool posets_isomorphic(const FacePoset& a, const FacePoset& b) {
  if (a == b) return true;
  const std::size_t n = a.size();
  if (n != b.size() || a.rank_counts() != b.rank_counts()) return false;

  std::vector<std::vector<char>> ra(n, std::vector<char>(n)), rb(n, std::vector<char>(n));
  std::vector<int> up_a(n), down_a(n), up_b(n), down_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ra[i][j] = a.precedes(i, j);
      rb[i][j] = b.precedes(i, j);
      if (ra[i][j]) ++up_a[i], ++down_a[j];
      if (rb[i][j]) ++up_b[i], ++down_b[j];
    }
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || a.faces()[i].dimension != b.faces()[j].dimension) continue;
      if (up_a[i] != up_b[j] || down_a[i] != down_b[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const auto jk = static_cast<std::size_t>(image[k]);
        ok = ra[i][k] == rb[j][jk] && ra[k][i] == rb[jk][j];
      }
      if (!ok) continue;
      image[i] = static_cast<int>(j);
      used[j] = 1;
      if (assign(i + 1)) return true;
      used[j] = 0;
    }
    image[i] = -1;
    return false;
  };
  return assign(0);
}

bool is_connected_without(const RotationGraph& g, std::span<const char> removed) {
  const int n = g.vertex_count();
  VertexId start = -1;
  int alive = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : g.darts_at(v)) {
      const VertexId w = g.head(d);
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

std::vector<VertexId> articulation_points(const RotationGraph& g, std::span<const char> removed) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  // Iterative DFS; the parent is skipped by edge id so parallel edges count as cycles.
  struct Frame {
    VertexId v;
    EdgeId via;
    int next = 0;
    int children = 0;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (removed[root] || disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < 3) {
        const DartId d = g.darts_at(top.v)[top.next++];
        const VertexId w = g.head(d);
        if (removed[w] || g.edge_of(d) == top.via) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          ++top.children;
          stack.push_back({w, g.edge_of(d)});
        } else {
          low[top.v] = std::min(low[top.v], disc[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = 1;
      } else {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (stack.size() > 1 && low[done.v] >= disc[parent.v]) is_cut[parent.v] = 1;
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

bool is_k_connected(const RotationGraph& g, int k) {
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  if (k <= 0) return true;
  if (!is_connected_without(g, removed)) return false;
  if (k == 1) return true;
  if (!articulation_points(g, removed).empty()) return false;
  if (k == 2) return true;
  if (k > 3) throw Error(ErrorKind::InvalidInput, "is_k_connected supports k <= 3");
  for (VertexId v = 0; v < n; ++v) {
    removed[v] = 1;
    const bool ok = articulation_points(g, removed).empty();
    removed[v] = 0;
    if (!ok) return false;
  }
  return true;
}

std::vector<std::pair<VertexId, VertexId>> separating_pairs(const RotationGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> out;
  if (n <= 3) return out;
  std::vector<char> removed(n, 0);
  for (VertexId p = 0; p < n; ++p) {
    removed[p] = 1;
    for (VertexId q : articulation_points(g, removed)) {
      if (q > p) out.emplace_back(p, q);
    }
    removed[p] = 0;
  }
  // A vertex whose removal alone disconnects makes every pair containing it separating.
  const auto cut_vertices = articulation_points(g, removed);
  for (VertexId c : cut_vertices) {
    for (VertexId v = 0; v < n; ++v) {
      if (v != c) out.emplace_back(std::min(c, v), std::max(c, v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  for (const auto& [p, q] : out) {
    const auto fp = g.facets_at(p);
    const auto fq = g.facets_at(q);
    bool shared = false;
    for (FacetId a : fp)
      for (FacetId b : fq) shared = shared || a == b;
    if (!shared) {
      throw Error(ErrorKind::InternalInvariantViolation,
                  "separating pair {" + std::to_string(p) + "," + std::to_string(q) + "} shares no facet");
    }
  }
  return out;
}

std::string to_dot(const RotationGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  v" << v << ";\n";
  for (DartId d = 0; d < g.dart_count(); ++d) {
    os << "  v" << g.origin(d) << " -> v" << g.head(d) << " [label=\"" << d << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tgk
