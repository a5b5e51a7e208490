#include "tgk/torus_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "tgk/error.hpp"

namespace tgk {

namespace {

std::string vtx(VertexId v) { return "vertex " + std::to_string(v); }
std::string dart(DartId d) { return "dart " + std::to_string(d); }

}  // namespace

Diagnostics validate_characteristic(const RotationGraph& g, const CharacteristicData& lam) {
  Diagnostics diag;
  if (static_cast<int>(lam.values.size()) != g.facet_count()) {
    diag.fail("expected " + std::to_string(g.facet_count()) + " facet vectors, got " +
              std::to_string(lam.values.size()));
    return diag;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto fs = g.facets_at(v);
    if (!is_unimodular_basis(lam.values[fs[0]], lam.values[fs[1]], lam.values[fs[2]])) {
      diag.fail(vtx(v) + ": facet vectors are not a unimodular basis");
    }
  }
  return diag;
}

Diagnostics validate_characteristic(const RotationGraph& g, const UnorientedCharacteristic& lam) {
  CharacteristicData lifted;
  for (const auto& c : lam.values) lifted.values.push_back(c.representative());
  return validate_characteristic(g, lifted);
}

TorusGraph::TorusGraph(RotationGraph graph, std::vector<LatticeCovector> axial, std::optional<std::vector<int>> sigma)
    : graph_(std::move(graph)), axial_(std::move(axial)), sigma_(std::move(sigma)), cache_(std::make_shared<Cache>()) {
  if (static_cast<int>(axial_.size()) != graph_.dart_count()) {
    throw Error(ErrorKind::InvalidInput, "axial function has " + std::to_string(axial_.size()) + " labels for " +
                                             std::to_string(graph_.dart_count()) + " darts");
  }
  if (sigma_) {
    if (static_cast<int>(sigma_->size()) != graph_.vertex_count()) {
      throw Error(ErrorKind::InvalidInput, "orientation has " + std::to_string(sigma_->size()) + " entries for " +
                                               std::to_string(graph_.vertex_count()) + " vertices");
    }
    for (int s : *sigma_) {
      if (s != 1 && s != -1) throw Error(ErrorKind::InvalidInput, "orientation values must be +1 or -1");
    }
  }
}

TorusGraph TorusGraph::with_sigma(std::optional<std::vector<int>> sigma) const {
  return TorusGraph(graph_, axial_, std::move(sigma));
}

TorusGraph TorusGraph::transformed(const Matrix3& m) const {
  std::vector<LatticeCovector> labels;
  labels.reserve(axial_.size());
  for (const auto& a : axial_) labels.push_back(m.act_right(a));
  return TorusGraph(graph_, std::move(labels), sigma_);
}

const Connection& TorusGraph::connection() const {
  std::call_once(cache_->once, [this] {
    try {
      cache_->connection = compute_connection(*this);
    } catch (const Error& e) {
      cache_->error = e;
    }
  });
  if (cache_->error) throw *cache_->error;
  return *cache_->connection;
}

TorusGraph from_characteristic(const RotationGraph& g, const CharacteristicData& lam) {
  if (static_cast<int>(lam.values.size()) != g.facet_count()) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(g.facet_count()) + " facet vectors, got " +
                                             std::to_string(lam.values.size()));
  }
  if (auto nice = validate_nice(g); !nice) throw Error(ErrorKind::NotNice, nice.messages.front());
  std::vector<LatticeCovector> axial(static_cast<std::size_t>(g.dart_count()));
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const auto [f1, f2] = g.facets_of_edge(d);
    try {
      axial[d] = solve_dual(lam.values[f1], lam.values[f2], lam.values[g.normal_facet(d)]);
    } catch (const Error& e) {
      throw Error(ErrorKind::NotUnimodular, vtx(g.origin(d)) + ": facet vectors are not a unimodular basis");
    }
  }
  return TorusGraph(g, std::move(axial));
}

CharacteristicData recover_characteristic(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  std::vector<std::optional<LatticeVector>> values(static_cast<std::size_t>(g.facet_count()));
  for (DartId d = 0; d < g.dart_count(); ++d) {
    // d and prev(d) run along facet_of(d); next(d) is its normal edge at origin(d).
    const FacetId f = g.facet_of(d);
    LatticeVector candidate;
    try {
      candidate = solve_dual(tg.axial(g.prev_at_vertex(d)), tg.axial(d), tg.axial(g.next_at_vertex(d)));
    } catch (const Error&) {
      throw Error(ErrorKind::NotUnimodular, vtx(g.origin(d)) + ": labels are not a unimodular basis");
    }
    if (!values[f]) {
      values[f] = candidate;
    } else if (*values[f] != candidate) {
      throw Error(ErrorKind::InconsistentFacetVector, "facet " + std::to_string(f) + " gets " +
                                                          values[f]->to_string() + " and " + candidate.to_string() +
                                                          " at " + vtx(g.origin(d)));
    }
  }
  CharacteristicData lam;
  for (auto& v : values) lam.values.push_back(std::move(*v));
  return lam;
}

Connection compute_connection(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  Connection conn;
  conn.transport.resize(static_cast<std::size_t>(g.dart_count()));
  for (DartId pq = 0; pq < g.dart_count(); ++pq) {
    const LatticeCovector& base = tg.axial(pq);
    const auto& at_q = g.darts_at(g.head(pq));
    for (DartId e : g.darts_at(g.origin(pq))) {
      int found = 0;
      DartId image = -1;
      for (DartId e2 : at_q) {
        if (is_multiple_of(tg.axial(e2) - tg.axial(e), base)) {
          ++found;
          image = e2;
        }
      }
      if (found != 1) {
        throw Error(ErrorKind::NoConnection, dart(pq) + ": " + std::to_string(found) + " candidates for " + dart(e));
      }
      conn.transport[pq][g.slot(e)] = image;
    }
  }
  return conn;
}

Diagnostics validate_torus_graph(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  Diagnostics diag;
  bool structural = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    const auto& a = tg.axial(d);
    const auto& b = tg.axial(g.reverse(d));
    if (a != b && a != -b) {
      diag.fail("axiom 1 (A(e) = +-A(reverse e)) fails on edge " + std::to_string(e) + ": " + a.to_string() + " vs " +
                b.to_string());
      structural = false;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& ds = g.darts_at(v);
    if (!is_unimodular_basis(tg.axial(ds[0]), tg.axial(ds[1]), tg.axial(ds[2]))) {
      diag.fail("axiom 2 (labels form a basis) fails at " + vtx(v));
      structural = false;
    }
  }
  if (structural) {
    try {
      (void)tg.connection();
    } catch (const Error& e) {
      diag.fail(std::string("axiom 3 (connection) fails: ") + e.what());
    }
  }
  if (tg.oriented()) {
    for (DartId d = 0; d < g.dart_count(); ++d) {
      const Integer sp = tg.sigma(g.origin(d));
      const Integer sq = tg.sigma(g.head(d));
      if (sp * tg.axial(d) != -(sq * tg.axial(g.reverse(d)))) {
        diag.fail("orientation rule fails on " + dart(d) + " from " + vtx(g.origin(d)));
        break;
      }
    }
  }
  return diag;
}

void require_valid(const TorusGraph& tg) {
  const auto diag = validate_torus_graph(tg);
  if (!diag) {
    std::string msg;
    for (const auto& m : diag.messages) msg += (msg.empty() ? "" : "; ") + m;
    throw Error(ErrorKind::InvalidTorusGraph, msg);
  }
}

CharacteristicData lift_signs(const UnorientedCharacteristic& lam, const std::vector<int>& choice) {
  if (choice.size() != lam.values.size()) {
    throw Error(ErrorKind::InvalidInput, "sign choice has " + std::to_string(choice.size()) + " entries for " +
                                             std::to_string(lam.values.size()) + " facets");
  }
  CharacteristicData out;
  for (std::size_t i = 0; i < choice.size(); ++i) {
    const auto& rep = lam.values[i].representative();
    out.values.push_back(choice[i] < 0 ? -rep : rep);
  }
  return out;
}

TorusGraph synthesize_orientation(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  std::vector<int> sigma(static_cast<std::size_t>(g.vertex_count()), 0);
  sigma[0] = 1;
  std::deque<VertexId> queue{0};
  while (!queue.empty()) {
    const VertexId p = queue.front();
    queue.pop_front();
    for (DartId d : g.darts_at(p)) {
      const auto& a = tg.axial(d);
      const auto& b = tg.axial(g.reverse(d));
      int required;
      if (b == a && !a.is_zero()) {
        required = -sigma[p];
      } else if (b == -a && !a.is_zero()) {
        required = sigma[p];
      } else {
        throw Error(ErrorKind::NotOrientable, "labels on edge " + std::to_string(g.edge_of(d)) +
                                                  " are not equal up to sign");
      }
      const VertexId q = g.head(d);
      if (sigma[q] == 0) {
        sigma[q] = required;
        queue.push_back(q);
      } else if (sigma[q] != required) {
        throw Error(ErrorKind::NotOrientable, "conflicting orientation forced at " + vtx(q));
      }
    }
  }
  return tg.with_sigma(std::move(sigma));
}

namespace {

bool labels_match(const LatticeCovector& a, const LatticeCovector& b, EquivalenceMode mode) {
  if (mode == EquivalenceMode::exact) return a == b;
  return a == b || a == -b;
}

// Extends a seed (vertex 0 of a -> vertex v of b with a fixed dart bijection)
// to the unique label-preserving isomorphism, if any.
std::optional<Isomorphism> propagate(const TorusGraph& a, const TorusGraph& b, VertexId target,
                                     const std::array<DartId, 3>& seed, EquivalenceMode mode) {
  const RotationGraph& ga = a.graph();
  const RotationGraph& gb = b.graph();
  Isomorphism iso;
  iso.vertex_map.assign(static_cast<std::size_t>(ga.vertex_count()), -1);
  iso.dart_map.assign(static_cast<std::size_t>(ga.dart_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(gb.vertex_count()), 0);

  auto assign = [&](VertexId u, VertexId w, const std::array<DartId, 3>& images) {
    iso.vertex_map[u] = w;
    used[w] = 1;
    for (int i = 0; i < 3; ++i) iso.dart_map[ga.darts_at(u)[i]] = images[i];
  };
  for (int i = 0; i < 3; ++i) {
    if (!labels_match(a.axial(ga.darts_at(0)[i]), b.axial(seed[i]), mode)) return std::nullopt;
  }
  assign(0, target, seed);
  std::deque<VertexId> queue{0};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (DartId d : ga.darts_at(u)) {
      const DartId d2 = iso.dart_map[d];
      const VertexId x = ga.head(d);
      const VertexId y = gb.head(d2);
      const DartId rd = ga.reverse(d);
      const DartId rd2 = gb.reverse(d2);
      if (iso.vertex_map[x] != -1) {
        if (iso.vertex_map[x] != y || iso.dart_map[rd] != rd2) return std::nullopt;
        continue;
      }
      if (used[y]) return std::nullopt;
      // Distinct basis labels force the matching of the remaining darts.
      std::array<DartId, 3> images{};
      std::array<char, 3> taken{};
      for (int i = 0; i < 3; ++i) {
        const DartId src = ga.darts_at(x)[i];
        images[i] = -1;
        if (src == rd) {
          images[i] = rd2;
          taken[gb.slot(rd2)] = 1;
        }
      }
      for (int i = 0; i < 3; ++i) {
        if (images[i] != -1) continue;
        const DartId src = ga.darts_at(x)[i];
        for (int j = 0; j < 3; ++j) {
          const DartId cand = gb.darts_at(y)[j];
          if (!taken[j] && labels_match(a.axial(src), b.axial(cand), mode)) {
            images[i] = cand;
            taken[j] = 1;
            break;
          }
        }
        if (images[i] == -1) return std::nullopt;
      }
      if (!labels_match(a.axial(rd), b.axial(rd2), mode)) return std::nullopt;
      assign(x, y, images);
      queue.push_back(x);
    }
  }
  return iso;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

std::optional<Isomorphism> is_equivalent(const TorusGraph& a, const TorusGraph& b, EquivalenceMode mode) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  const RotationGraph& gb = b.graph();
  for (VertexId v = 0; v < gb.vertex_count(); ++v) {
    for (const auto& perm : kPermutations) {
      const std::array<DartId, 3> seed{gb.darts_at(v)[perm[0]], gb.darts_at(v)[perm[1]], gb.darts_at(v)[perm[2]]};
      if (auto iso = propagate(a, b, v, seed, mode)) return iso;
    }
  }
  return std::nullopt;
}

std::optional<TwistedIsomorphism> is_equivalent_twisted(const TorusGraph& a, const TorusGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  const RotationGraph& ga = a.graph();
  const RotationGraph& gb = b.graph();
  const auto& d0 = ga.darts_at(0);
  const Matrix3 source = Matrix3::from_rows(a.axial(d0[0]), a.axial(d0[1]), a.axial(d0[2]));
  if (source.determinant() != 1 && source.determinant() != -1) return std::nullopt;
  const Matrix3 source_inv = source.unimodular_inverse();
  for (VertexId v = 0; v < gb.vertex_count(); ++v) {
    for (const auto& perm : kPermutations) {
      const std::array<DartId, 3> seed{gb.darts_at(v)[perm[0]], gb.darts_at(v)[perm[1]], gb.darts_at(v)[perm[2]]};
      const Matrix3 target = Matrix3::from_rows(b.axial(seed[0]), b.axial(seed[1]), b.axial(seed[2]));
      const Integer det = target.determinant();
      if (det != 1 && det != -1) continue;
      // source * m = target, so rows of a's labels map onto b's.
      const Matrix3 m = source_inv * target;
      const TorusGraph moved = a.transformed(m);
      if (auto iso = propagate(moved, b, v, seed, EquivalenceMode::exact)) return TwistedIsomorphism{m, *iso};
    }
  }
  return std::nullopt;
}

namespace {

std::array<DartId, 2> sorted_pair(DartId a, DartId b) { return a < b ? std::array<DartId, 2>{a, b} : std::array<DartId, 2>{b, a}; }

}  // namespace

std::vector<Face> face_subgraphs(const TorusGraph& tg, int k) {
  const RotationGraph& g = tg.graph();
  std::vector<Face> out;
  auto edges_between = [&](const std::vector<DartId>& darts) {
    std::vector<EdgeId> edges;
    for (DartId d : darts) edges.push_back(g.edge_of(d));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
  };
  switch (k) {
    case 0:
      for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(Face{0, {v}, {}});
      break;
    case 1:
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const DartId d = g.edge_dart(e);
        auto verts = std::vector<VertexId>{g.origin(d), g.head(d)};
        std::sort(verts.begin(), verts.end());
        out.push_back(Face{1, verts, {e}});
      }
      break;
    case 2: {
      const Connection& conn = tg.connection();
      std::set<std::pair<std::vector<VertexId>, std::vector<EdgeId>>> seen;
      constexpr std::array<DartId, 2> kNone{-1, -1};
      std::vector<std::array<DartId, 2>> chosen(static_cast<std::size_t>(g.vertex_count()));
      std::vector<VertexId> queue;
      for (VertexId p = 0; p < g.vertex_count(); ++p) {
        const auto& ds = g.darts_at(p);
        for (int i = 0; i < 3; ++i) {
          // Closure of the pair of darts at p other than ds[i].
          std::fill(chosen.begin(), chosen.end(), kNone);
          chosen[p] = sorted_pair(ds[(i + 1) % 3], ds[(i + 2) % 3]);
          queue.assign(1, p);
          bool closed = true;
          for (std::size_t head = 0; head < queue.size() && closed; ++head) {
            const VertexId u = queue[head];
            for (DartId d : chosen[u]) {
              const VertexId w = g.head(d);
              const auto sorted = sorted_pair(conn(g, d, chosen[u][0]), conn(g, d, chosen[u][1]));
              if (chosen[w] == kNone) {
                chosen[w] = sorted;
                queue.push_back(w);
              } else if (chosen[w] != sorted) {
                closed = false;
              }
            }
          }
          if (!closed) continue;
          std::vector<VertexId> verts;
          std::vector<DartId> darts;
          for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (chosen[v] == kNone) continue;
            verts.push_back(v);
            darts.insert(darts.end(), chosen[v].begin(), chosen[v].end());
          }
          auto edges = edges_between(darts);
          if (seen.emplace(verts, edges).second) out.push_back(Face{2, verts, edges});
        }
      }
      break;
    }
    case 3: {
      Face whole{3, {}, {}};
      for (VertexId v = 0; v < g.vertex_count(); ++v) whole.vertices.push_back(v);
      for (EdgeId e = 0; e < g.edge_count(); ++e) whole.edges.push_back(e);
      out.push_back(std::move(whole));
      break;
    }
    default:
      throw Error(ErrorKind::InvalidInput, "face subgraph valence must be 0..3, got " + std::to_string(k));
  }
  return out;
}

FacePoset subgraph_poset(const TorusGraph& tg) {
  std::vector<Face> faces{Face{-1, {}, {}}};
  for (int k = 0; k <= 3; ++k) {
    auto part = face_subgraphs(tg, k);
    faces.insert(faces.end(), part.begin(), part.end());
  }
  return FacePoset(std::move(faces));
}

std::string to_dot(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  std::ostringstream os;
  os << "digraph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v;
    if (tg.oriented()) os << " [label=\"v" << v << (tg.sigma(v) > 0 ? " +" : " -") << "\"]";
    os << ";\n";
  }
  for (DartId d = 0; d < g.dart_count(); ++d) {
    os << "  v" << g.origin(d) << " -> v" << g.head(d) << " [label=\"" << tg.axial(d).to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tgk
