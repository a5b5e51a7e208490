#pragma once

// Trivalent graphs embedded in the 2-sphere through a rotation system.
//
// Darts are the directed half-edges 0..3V-1. Each vertex lists its three
// outgoing darts in cyclic order, and `edges` pairs every dart with its
// reverse. The face walk successor of a dart d is next_at_vertex(reverse(d)),
// so the facet containing d is the region on the corner that follows d.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tgk {

using VertexId = std::int32_t;
using DartId = std::int32_t;
using EdgeId = std::int32_t;
using FacetId = std::int32_t;

struct RotationTable {
  int vertex_count = 0;
  std::vector<std::array<DartId, 3>> rotations;
  std::vector<std::pair<DartId, DartId>> edges;

  friend bool operator==(const RotationTable&, const RotationTable&) = default;
};

/// A facet as a closed face walk of the rotation system.
struct Facet {
  std::vector<DartId> boundary;
};

struct Diagnostics {
  bool ok = true;
  std::vector<std::string> messages;

  void fail(std::string message) {
    ok = false;
    messages.push_back(std::move(message));
  }
  explicit operator bool() const { return ok; }
};

class RotationGraph {
 public:
  /// Validates and builds; throws Error(MalformedTable | NotTrivalent | Disconnected | NotSphere).
  static RotationGraph build(const RotationTable& table);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int dart_count() const { return static_cast<int>(origin_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  VertexId origin(DartId d) const { return origin_[d]; }
  VertexId head(DartId d) const { return origin_[reverse_[d]]; }
  DartId reverse(DartId d) const { return reverse_[d]; }
  /// Position of d in its vertex rotation (0, 1 or 2).
  int slot(DartId d) const { return slot_[d]; }
  DartId next_at_vertex(DartId d) const { return rotations_[origin_[d]][(slot_[d] + 1) % 3]; }
  DartId prev_at_vertex(DartId d) const { return rotations_[origin_[d]][(slot_[d] + 2) % 3]; }
  DartId face_successor(DartId d) const { return next_at_vertex(reverse_[d]); }
  const std::array<DartId, 3>& darts_at(VertexId v) const { return rotations_[v]; }
  EdgeId edge_of(DartId d) const { return edge_of_[d]; }
  /// The dart of edge e listed first in the table.
  DartId edge_dart(EdgeId e) const { return edges_[e].first; }
  VertexId neighbor(DartId d) const { return head(d); }

  const std::vector<Facet>& facets() const { return facets_; }
  /// Facet whose face walk contains d; at origin(d) it holds the corner between prev_at_vertex(d) and d.
  FacetId facet_of(DartId d) const { return facet_of_[d]; }
  /// The three facets around v, facet i holding the corner that ends at darts_at(v)[i].
  std::array<FacetId, 3> facets_at(VertexId v) const;
  /// The two facets containing the edge of dart d.
  std::pair<FacetId, FacetId> facets_of_edge(DartId d) const { return {facet_of_[d], facet_of_[next_at_vertex(d)]}; }
  /// The facet at origin(d) that does not contain d.
  FacetId normal_facet(DartId d) const { return facet_of_[prev_at_vertex(d)]; }
  std::vector<VertexId> facet_vertices(FacetId f) const;

  const RotationTable& table() const { return table_; }
  bool has_multiple_edges() const;
  /// Same graph with every rotation reversed (the mirror embedding).
  RotationGraph mirrored() const;

 private:
  RotationTable table_;
  std::vector<std::array<DartId, 3>> rotations_;
  std::vector<std::pair<DartId, DartId>> edges_;
  std::vector<VertexId> origin_;
  std::vector<DartId> reverse_;
  std::vector<int> slot_;
  std::vector<EdgeId> edge_of_;
  std::vector<Facet> facets_;
  std::vector<FacetId> facet_of_;
};

/// Manifold-with-faces conditions: every facet boundary is a simple cycle,
/// the three facets at each vertex are distinct and no edge has the same facet
/// on both sides.
Diagnostics validate_nice(const RotationGraph& g);

/// A face of the orbit space, described by the vertices and edges of its one-skeleton.
struct Face {
  int dimension = -1;  // -1 for the empty face, 3 for the whole space
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};

class FacePoset {
 public:
  explicit FacePoset(std::vector<Face> faces);

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  /// Number of faces of each dimension -1..3, indexed by dimension + 1.
  std::array<int, 5> rank_counts() const;
  bool precedes(std::size_t a, std::size_t b) const;

  friend bool operator==(const FacePoset&, const FacePoset&) = default;

 private:
  std::vector<Face> faces_;  // sorted
};

FacePoset face_poset(const RotationGraph& g);

/// Every pair of posets that are equal as sets of faces over the same graph
/// are isomorphic via the identity; otherwise a rank- and incidence-preserving
/// bijection is searched for.
bool posets_isomorphic(const FacePoset& a, const FacePoset& b);

/// Connectivity after deleting `removed` (vertices flagged true). Zero or one
/// remaining vertices count as connected.
bool is_connected_without(const RotationGraph& g, std::span<const char> removed);

bool is_k_connected(const RotationGraph& g, int k);

/// All unordered pairs whose removal disconnects g, excluding pairs that are the whole vertex set.
/// Throws Error(InternalInvariantViolation) if a separating pair shares no facet.
std::vector<std::pair<VertexId, VertexId>> separating_pairs(const RotationGraph& g);

/// Articulation points of g with the flagged vertices deleted.
std::vector<VertexId> articulation_points(const RotationGraph& g, std::span<const char> removed);

std::string to_dot(const RotationGraph& g);

}  // namespace tgk
