#pragma once

// Slow reference implementations used to check the library.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tgk/torus_graph.hpp"

namespace tgk::testing {

/// Removes every vertex set of size < k and runs a BFS on the rest.
bool k_connected_exhaustive(const RotationGraph& g, int k);

/// Every vertex pair whose removal leaves a disconnected graph with at least one vertex.
std::vector<std::pair<VertexId, VertexId>> separating_pairs_exhaustive(const RotationGraph& g);

/// True iff v = k * base for an integer k, using cross products and one division.
bool multiple_by_cross(const LatticeCovector& v, const LatticeCovector& base);

/// Number of the 6 bijections E_p -> E_q along dart pq that satisfy the
/// congruence for every edge, together with the last one found.
struct BijectionCount {
  int count = 0;
  std::array<DartId, 3> image{};
};
BijectionCount connection_bijections(const TorusGraph& tg, DartId pq);

/// Covector x with x(a1) = x(a2) = 0 and x(a3) = 1, by Cramer's rule on the transposed system.
LatticeCovector dual_by_cramer(const LatticeVector& a1, const LatticeVector& a2, const LatticeVector& a3);

/// Invariant under GL(3,Z): the facet values rewritten in the basis given by
/// the three facets at vertex 0.
std::vector<std::array<long long, 3>> gl_canonical(const RotationGraph& g, std::span<const std::array<long long, 3>> lam);

/// One characteristic function per GL(3,Z) orbit among the bounded
/// assignments, up to `limit` orbits, in enumeration order.
std::vector<CharacteristicData> gl_representatives(const RotationGraph& g, std::int64_t bound,
                                                   std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace tgk::testing
