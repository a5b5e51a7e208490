#include "fixtures.hpp"

#include "maps.hpp"
#include "tgk/error.hpp"

namespace tgk::testing {

LatticeCovector cov(long x, long y, long z) { return {x, y, z}; }
LatticeVector vec(long x, long y, long z) { return {x, y, z}; }

TorusGraph gamma_sp(const LatticeCovector& alpha, const LatticeCovector& beta, const LatticeCovector& gamma) {
  // Edge i of theta() has dart 2i at vertex 0 and dart 2i+1 at vertex 1.
  return TorusGraph(theta(), {alpha, alpha, beta, beta, gamma, gamma}, std::vector<int>{1, -1});
}

CharacteristicData simplex_characteristic() {
  return {{vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1), vec(-1, -1, -1)}};
}

TorusGraph simplex() { return synthesize_orientation(from_characteristic(k4(), simplex_characteristic())); }

TorusGraph sb_graph(int eps, long a, long b) {
  const LatticeCovector alpha = cov(1, 0, 0), beta = cov(0, 1, 0), gamma = cov(0, 0, 1);
  const LatticeCovector top_b = Integer(b) * alpha + gamma;
  const LatticeCovector top_a = Integer(a) * alpha + beta;
  const LatticeCovector single = Integer(eps) * alpha;
  // sb_shape(): edges 0,1 join P1,P2; edges 2,3 join P3,P4; edge 4 is P1-P3, edge 5 is P2-P4.
  // Edges 1 and 2 bound a common quadrilateral, as do edges 0 and 3.
  std::vector<LatticeCovector> axial{top_b, top_b, top_a, top_a, beta, beta, gamma, gamma, single, alpha, single, alpha};
  return TorusGraph(sb_shape(), std::move(axial), std::vector<int>{1, -1, -eps, eps});
}

CharacteristicData cube_characteristic() {
  const RotationGraph g = cube();
  CharacteristicData lam;
  lam.values.assign(static_cast<std::size_t>(g.facet_count()), LatticeVector{});
  std::vector<int> axis(static_cast<std::size_t>(g.facet_count()), -1);
  int next_axis = 0;
  for (FacetId f = 0; f < g.facet_count(); ++f) {
    if (axis[f] != -1) continue;
    axis[f] = next_axis;
    const auto vf = g.facet_vertices(f);
    for (FacetId h = f + 1; h < g.facet_count(); ++h) {
      const auto vh = g.facet_vertices(h);
      bool disjoint = true;
      for (VertexId v : vf)
        for (VertexId w : vh) disjoint = disjoint && v != w;
      if (disjoint) axis[h] = next_axis;
    }
    ++next_axis;
  }
  for (FacetId f = 0; f < g.facet_count(); ++f) lam.values[f] = unit_vector(axis[f]);
  return lam;
}

TorusGraph cube_product() { return synthesize_orientation(from_characteristic(cube(), cube_characteristic())); }

SumResult attach(const TorusGraph& g, VertexId p, const TorusGraph& leaf, VertexId q, const std::array<int, 3>& perm) {
  const auto& dp = g.graph().darts_at(p);
  const auto& dq = leaf.graph().darts_at(q);
  const Matrix3 target = Matrix3::from_rows(g.axial(dp[0]), g.axial(dp[1]), g.axial(dp[2]));
  const Matrix3 source =
      Matrix3::from_rows(leaf.axial(dq[perm[0]]), leaf.axial(dq[perm[1]]), leaf.axial(dq[perm[2]]));
  TorusGraph moved = leaf.transformed(source.unimodular_inverse() * target);
  if (moved.sigma(q) == g.sigma(p)) {
    std::vector<int> flipped = *moved.sigma_map();
    for (int& s : flipped) s = -s;
    moved = moved.with_sigma(flipped);
  }
  return connected_sum(g, moved, SumSite{p, q, {dq[perm[0]], dq[perm[1]], dq[perm[2]]}});
}

TorusGraph figure4() {
  const TorusGraph bundle = sb_graph(-1, 0, 0);
  // P1 (vertex 0) and P4 (vertex 3) lie on different double edges.
  const SumResult first = attach(bundle, 0, simplex(), 0, {0, 1, 2});
  const SumResult second = attach(first.graph, first.record.left_map[3], simplex(), 0, {0, 1, 2});
  return second.graph;
}

RandomSum random_sum(std::mt19937_64& rng, int pieces) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  auto leaf = [&]() -> TorusGraph {
    switch (pick(3)) {
      case 0:
        return gamma_sp(cov(1, 0, 0), cov(0, 1, 0), cov(0, 0, 1));
      case 1:
        return simplex();
      default:
        return sb_graph(pick(2) == 0 ? 1 : -1, pick(7) - 3, pick(7) - 3);
    }
  };
  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  RandomSum out{leaf(), pieces, std::nullopt, std::nullopt, std::nullopt};
  for (int k = 1; k < pieces; ++k) {
    const TorusGraph next = leaf();
    SumResult sum = attach(out.graph, pick(out.graph.vertex_count()), next, pick(next.vertex_count()),
                           perms[static_cast<std::size_t>(pick(6))]);
    out.last_left = out.graph;
    out.last_right = next;
    out.last = sum.record;
    out.graph = std::move(sum.graph);
  }
  return out;
}

}  // namespace tgk::testing
