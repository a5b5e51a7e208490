#pragma once

// Torus graphs used across the tests, with labels written down
// independently of the library's construction routines.

#include <array>
#include <optional>
#include <random>

#include "tgk/surgery.hpp"

namespace tgk::testing {

LatticeCovector cov(long x, long y, long z);
LatticeVector vec(long x, long y, long z);

/// The 2-vertex triple-edge graph with labels alpha, beta, gamma on both ends
/// of the three edges; sigma = (+1, -1).
TorusGraph gamma_sp(const LatticeCovector& alpha, const LatticeCovector& beta, const LatticeCovector& gamma);

/// K4 with the projective-space characteristic function (e1, e2, e3, -e1-e2-e3), oriented.
TorusGraph simplex();
CharacteristicData simplex_characteristic();

/// Labels of the S^4-bundle M(eps, a, b) from its tangential representations:
/// vertices P1, P2 carry {eps*alpha, a*alpha + beta, b*alpha + gamma} and
/// P3, P4 carry {alpha, beta, gamma}, with alpha, beta, gamma the dual basis.
TorusGraph sb_graph(int eps, long a, long b);

/// The cube with e1, e2, e3 on its three pairs of opposite facets, oriented.
TorusGraph cube_product();
CharacteristicData cube_characteristic();

/// Connected sum of g at vertex p with `leaf` at vertex q, after moving the
/// leaf's labels by the unique GL(3,Z) element taking darts_at(q)[perm[i]] to
/// darts_at(p)[i], and flipping its orientation when the signs would agree.
SumResult attach(const TorusGraph& g, VertexId p, const TorusGraph& leaf, VertexId q, const std::array<int, 3>& perm);

/// CP3 # M(-1,0,0) # conj-CP3 glued at the two vertices of the bundle that
/// leave a simple graph: 8 vertices, a 2-edge cut, blocks Simplex / SB / Simplex.
TorusGraph figure4();

struct RandomSum {
  TorusGraph graph;
  int pieces;
  /// The final gluing and its two summands (absent for a single piece).
  std::optional<GluingRecord> last;
  std::optional<TorusGraph> last_left;
  std::optional<TorusGraph> last_right;
};

/// Sum of `pieces` basic leaves (S6, Simplex, SB with |a|,|b| <= 3) at random vertices.
RandomSum random_sum(std::mt19937_64& rng, int pieces);

}  // namespace tgk::testing
