#include "tgk/surgery.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "tgk/error.hpp"

namespace tgk {

std::array<EdgeId, 3> GluingRecord::cut(const RotationGraph& combined) const {
  std::array<EdgeId, 3> edges{};
  for (int i = 0; i < 3; ++i) edges[i] = combined.edge_of(joins[i]);
  return edges;
}

std::vector<SumSite> find_sum_sites(const TorusGraph& a, const TorusGraph& b) {
  std::vector<SumSite> sites;
  if (!a.oriented() || !b.oriented()) return sites;
  const RotationGraph& ga = a.graph();
  const RotationGraph& gb = b.graph();
  for (VertexId p = 0; p < ga.vertex_count(); ++p) {
    for (VertexId q = 0; q < gb.vertex_count(); ++q) {
      if (a.sigma(p) == b.sigma(q)) continue;
      SumSite site{p, q, {-1, -1, -1}};
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        const auto& label = a.axial(ga.darts_at(p)[i]);
        for (DartId m : gb.darts_at(q)) {
          if (b.axial(m) == label) site.matching[i] = m;
        }
        ok = site.matching[i] != -1;
      }
      if (ok) sites.push_back(site);
    }
  }
  return sites;
}

namespace {

void check_site(const TorusGraph& a, const TorusGraph& b, const SumSite& site) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InadmissibleSite, why); };
  if (!a.oriented() || !b.oriented()) fail("both graphs need an orientation");
  const RotationGraph& ga = a.graph();
  const RotationGraph& gb = b.graph();
  if (site.p < 0 || site.p >= ga.vertex_count() || site.q < 0 || site.q >= gb.vertex_count()) {
    fail("site vertex out of range");
  }
  if (a.sigma(site.p) == b.sigma(site.q)) fail("orientations at p and q agree");
  std::array<DartId, 3> sorted = site.matching;
  std::array<DartId, 3> at_q = gb.darts_at(site.q);
  std::sort(sorted.begin(), sorted.end());
  std::sort(at_q.begin(), at_q.end());
  if (sorted != at_q) fail("matching is not a bijection onto the darts at q");
  for (int i = 0; i < 3; ++i) {
    const DartId d = ga.darts_at(site.p)[i];
    if (a.axial(d) != b.axial(site.matching[i])) {
      fail("labels " + a.axial(d).to_string() + " and " + b.axial(site.matching[i]).to_string() + " differ");
    }
    if (ga.head(d) == site.p) fail("loop at p");
  }
}

}  // namespace

SumResult connected_sum(const TorusGraph& a, const TorusGraph& b, const SumSite& site) {
  check_site(a, b, site);
  const RotationGraph& ga = a.graph();
  const int va = ga.vertex_count();
  const int vb = b.vertex_count();
  const int n = va + vb - 2;

  GluingRecord record;
  record.site = site;
  record.sigma_p = a.sigma(site.p);
  record.sigma_q = b.sigma(site.q);
  record.left_map.assign(static_cast<std::size_t>(va), -1);
  record.right_map.assign(static_cast<std::size_t>(vb), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < va; ++v)
    if (v != site.p) record.left_map[v] = next++;
  for (VertexId v = 0; v < vb; ++v)
    if (v != site.q) record.right_map[v] = next++;
  for (int i = 0; i < 3; ++i) record.labels[i] = a.axial(ga.darts_at(site.p)[i]);

  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < va; ++v)
    if (v != site.p) sigma[record.left_map[v]] = a.sigma(v);
  for (VertexId v = 0; v < vb; ++v)
    if (v != site.q) sigma[record.right_map[v]] = b.sigma(v);

  for (int mirror = 0; mirror < 2; ++mirror) {
    const RotationGraph gb = mirror ? b.graph().mirrored() : b.graph();
    auto map_a = [&](DartId d) { return 3 * record.left_map[ga.origin(d)] + ga.slot(d); };
    auto map_b = [&](DartId d) { return 3 * record.right_map[gb.origin(d)] + gb.slot(d); };

    RotationTable t;
    t.vertex_count = n;
    for (VertexId v = 0; v < n; ++v) t.rotations.push_back({3 * v, 3 * v + 1, 3 * v + 2});
    std::vector<LatticeCovector> axial(static_cast<std::size_t>(3 * n));
    for (DartId d = 0; d < ga.dart_count(); ++d)
      if (ga.origin(d) != site.p) axial[map_a(d)] = a.axial(d);
    for (DartId d = 0; d < gb.dart_count(); ++d)
      if (gb.origin(d) != site.q) axial[map_b(d)] = b.axial(d);

    for (EdgeId e = 0; e < ga.edge_count(); ++e) {
      const DartId d = ga.edge_dart(e);
      if (ga.origin(d) != site.p && ga.head(d) != site.p) t.edges.emplace_back(map_a(d), map_a(ga.reverse(d)));
    }
    for (EdgeId e = 0; e < gb.edge_count(); ++e) {
      const DartId d = gb.edge_dart(e);
      if (gb.origin(d) != site.q && gb.head(d) != site.q) t.edges.emplace_back(map_b(d), map_b(gb.reverse(d)));
    }
    for (int i = 0; i < 3; ++i) {
      const DartId from_left = map_a(ga.reverse(ga.darts_at(site.p)[i]));
      const DartId from_right = map_b(gb.reverse(site.matching[i]));
      t.edges.emplace_back(from_left, from_right);
      record.joins[i] = from_left;
    }

    RotationGraph g;
    try {
      g = RotationGraph::build(t);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotSphere) continue;
      throw;
    }
    TorusGraph out(std::move(g), std::move(axial), sigma);
    const auto diag = validate_torus_graph(out);
    if (!diag) throw Error(ErrorKind::InternalInvariantViolation, "connected sum is invalid: " + diag.messages.front());
    return SumResult{std::move(out), std::move(record)};
  }
  throw Error(ErrorKind::InternalInvariantViolation, "no splice of the two rotation systems is spherical");
}

namespace {

struct CutSides {
  std::vector<int> side;                 // 0 or 1 per vertex
  std::array<DartId, 3> outward;         // dart of each cut edge leaving side 0
  std::array<int, 3> left_next, right_next;
};

// Cut edge j at which the face walk from `start` first returns; `returns`
// holds the darts that re-enter the starting side.
int return_index(const RotationGraph& g, DartId start, const std::array<DartId, 3>& returns) {
  DartId d = g.face_successor(start);
  for (int guard = 0; guard <= g.dart_count(); ++guard, d = g.face_successor(d)) {
    for (int j = 0; j < 3; ++j)
      if (d == returns[j]) return j;
  }
  throw Error(ErrorKind::InternalInvariantViolation, "face walk never returns across the cut");
}

bool is_three_cycle(const std::array<int, 3>& next) {
  return next[0] != 0 && next[next[0]] != 0 && next[next[next[0]]] == 0;
}

CutSides analyse_cut(const RotationGraph& g, const std::array<EdgeId, 3>& cut) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::NotACut, why); };
  for (EdgeId e : cut)
    if (e < 0 || e >= g.edge_count()) fail("edge " + std::to_string(e) + " out of range");
  if (cut[0] == cut[1] || cut[1] == cut[2] || cut[0] == cut[2]) fail("cut edges must be distinct");

  CutSides sides;
  sides.side.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  int components = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (sides.side[s] != -1) continue;
    if (components == 2) fail("removing the edges leaves more than two components");
    sides.side[s] = components;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (DartId d : g.darts_at(v)) {
        const EdgeId e = g.edge_of(d);
        if (e == cut[0] || e == cut[1] || e == cut[2]) continue;
        if (sides.side[g.head(d)] == -1) {
          sides.side[g.head(d)] = components;
          queue.push_back(g.head(d));
        }
      }
    }
    ++components;
  }
  if (components != 2) fail("removing the edges does not disconnect the graph");
  std::array<DartId, 3> inward{};
  for (int i = 0; i < 3; ++i) {
    DartId d = g.edge_dart(cut[i]);
    if (sides.side[g.origin(d)] == sides.side[g.head(d)]) fail("edge " + std::to_string(cut[i]) + " joins one side");
    if (sides.side[g.origin(d)] == 1) d = g.reverse(d);
    sides.outward[i] = d;
    inward[i] = g.reverse(d);
  }
  for (int i = 0; i < 3; ++i) {
    sides.left_next[i] = return_index(g, sides.outward[i], inward);
    sides.right_next[i] = return_index(g, inward[i], sides.outward);
  }
  if (!is_three_cycle(sides.left_next) || !is_three_cycle(sides.right_next)) {
    fail("cut edges do not bound a single disk on each side");
  }
  return sides;
}

struct Side {
  TorusGraph graph;
  std::vector<VertexId> to_original;  // -1 for the cap
  std::array<int, 3> cap_slot;        // slot at the cap of the dart toward cut edge i
};

Side build_side(const TorusGraph& tg, const CutSides& cs, int which, int cap_sigma) {
  const RotationGraph& g = tg.graph();
  std::vector<VertexId> index(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexId> to_original;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (cs.side[v] == which) {
      index[v] = static_cast<VertexId>(to_original.size());
      to_original.push_back(v);
    }
  }
  const auto cap = static_cast<VertexId>(to_original.size());
  to_original.push_back(-1);
  const int n = cap + 1;

  const auto& next = which == 0 ? cs.left_next : cs.right_next;
  const std::array<int, 3> order{0, next[0], next[next[0]]};
  std::array<int, 3> cap_slot{};
  for (int k = 0; k < 3; ++k) cap_slot[order[k]] = k;

  std::array<DartId, 3> boundary{};
  for (int i = 0; i < 3; ++i) boundary[i] = which == 0 ? cs.outward[i] : g.reverse(cs.outward[i]);

  auto map = [&](DartId d) { return 3 * index[g.origin(d)] + g.slot(d); };
  RotationTable t;
  t.vertex_count = n;
  for (VertexId v = 0; v < n; ++v) t.rotations.push_back({3 * v, 3 * v + 1, 3 * v + 2});
  std::vector<LatticeCovector> axial(static_cast<std::size_t>(3 * n));
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (index[v] == -1) continue;
    sigma[index[v]] = tg.sigma(v);
    for (DartId d : g.darts_at(v)) axial[map(d)] = tg.axial(d);
  }
  sigma[cap] = cap_sigma;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    if (index[g.origin(d)] != -1 && index[g.head(d)] != -1) t.edges.emplace_back(map(d), map(g.reverse(d)));
  }
  for (int i = 0; i < 3; ++i) {
    const DartId cap_dart = 3 * cap + cap_slot[i];
    t.edges.emplace_back(map(boundary[i]), cap_dart);
    // Orientation rule on the cap edge fixes the cap-side label.
    const Integer factor = -tg.sigma(g.origin(boundary[i])) * cap_sigma;
    axial[cap_dart] = factor * tg.axial(boundary[i]);
  }
  return Side{TorusGraph(RotationGraph::build(t), std::move(axial), std::move(sigma)), std::move(to_original), cap_slot};
}

bool usable(const TorusGraph& tg) { return validate_torus_graph(tg).ok && validate_nice(tg.graph()).ok; }

}  // namespace

SplitResult split(const TorusGraph& tg, const std::array<EdgeId, 3>& cut) {
  if (!tg.oriented()) throw Error(ErrorKind::InvalidInput, "split needs an oriented torus graph");
  const RotationGraph& g = tg.graph();
  const CutSides cs = analyse_cut(g, cut);

  for (int s : {1, -1}) {
    Side left = build_side(tg, cs, 0, s);
    Side right = build_side(tg, cs, 1, -s);
    if (!usable(left.graph) || !usable(right.graph)) continue;

    GluingRecord record;
    const VertexId cap_l = left.graph.vertex_count() - 1;
    const VertexId cap_r = right.graph.vertex_count() - 1;
    record.site.p = cap_l;
    record.site.q = cap_r;
    record.sigma_p = s;
    record.sigma_q = -s;
    for (int i = 0; i < 3; ++i) {
      const int k = left.cap_slot[i];
      record.site.matching[k] = 3 * cap_r + right.cap_slot[i];
      record.labels[k] = left.graph.axial(3 * cap_l + k);
      record.joins[i] = cs.outward[i];
    }
    // Maps of the record point into the combined (original) graph.
    record.left_map = left.to_original;
    record.right_map = right.to_original;
    return SplitResult{std::move(left.graph), std::move(right.graph), std::move(record)};
  }
  throw Error(ErrorKind::InvalidCap, "neither cap orientation yields two valid torus graphs");
}

std::vector<std::array<EdgeId, 3>> find_splits(const TorusGraph& tg) {
  const RotationGraph& g = tg.graph();
  std::vector<std::array<EdgeId, 3>> out;
  const int m = g.edge_count();
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = a + 1; b < m; ++b) {
      for (EdgeId c = b + 1; c < m; ++c) {
        const std::array<EdgeId, 3> cut{a, b, c};
        try {
          const CutSides cs = analyse_cut(g, cut);
          const auto left = std::count(cs.side.begin(), cs.side.end(), 0);
          const auto right = static_cast<long>(cs.side.size()) - left;
          if (left < 2 || right < 2) continue;
          (void)split(tg, cut);
          out.push_back(cut);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotACut && e.kind() != ErrorKind::InvalidCap) throw;
        }
      }
    }
  }
  return out;
}

}  // namespace tgk
