#pragma once

// Connected sum of oriented torus graphs at a vertex pair, and its inverse:
// splitting along a 3-edge cut and capping both sides with a new vertex.

#include <array>
#include <vector>

#include "tgk/torus_graph.hpp"

namespace tgk {

struct SumSite {
  VertexId p = -1;                 // vertex of the left graph
  VertexId q = -1;                 // vertex of the right graph
  std::array<DartId, 3> matching;  // dart at q matched with darts_at(p)[i]

  friend bool operator==(const SumSite&, const SumSite&) = default;
};

/// Everything needed to undo or redo one connected sum.
struct GluingRecord {
  SumSite site;
  /// The three joining darts of the combined graph, from the left part to the right part.
  std::array<DartId, 3> joins;
  std::array<LatticeCovector, 3> labels;  // labels at p (equivalently at q), in site order
  int sigma_p = 0;
  int sigma_q = 0;
  /// Vertex of the combined graph for each vertex of the left/right graph; -1 for p and q.
  std::vector<VertexId> left_map;
  std::vector<VertexId> right_map;

  std::array<EdgeId, 3> cut(const RotationGraph& combined) const;
};

struct SumResult {
  TorusGraph graph;
  GluingRecord record;
};

struct SplitResult {
  TorusGraph left;
  TorusGraph right;
  GluingRecord record;
};

/// All sites with equal label triples and opposite orientations.
std::vector<SumSite> find_sum_sites(const TorusGraph& a, const TorusGraph& b);

/// Throws InadmissibleSite; the rotation at the right graph is mirrored when
/// that is what keeps the result on the sphere.
SumResult connected_sum(const TorusGraph& a, const TorusGraph& b, const SumSite& site);

/// Splits along three edges whose removal leaves exactly two components.
/// The left part is the component holding the smallest vertex id. Caps are
/// the last vertex of each part. Throws NotACut, InvalidCap or InvalidInput
/// (missing orientation).
SplitResult split(const TorusGraph& tg, const std::array<EdgeId, 3>& cut);

/// Cuts leaving at least two vertices on each side that split admits.
std::vector<std::array<EdgeId, 3>> find_splits(const TorusGraph& tg);

}  // namespace tgk
