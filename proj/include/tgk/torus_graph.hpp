#pragma once

// Torus graphs: rotation graphs carrying an axial function on darts, an
// optional vertex orientation and the derived connection.

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tgk/embedded_graph.hpp"
#include "tgk/error.hpp"
#include "tgk/lattice.hpp"

namespace tgk {

/// Omnioriented characteristic function: one vector per facet, indexed by
/// FacetId. Facets are numbered in order of their smallest dart.
struct CharacteristicData {
  std::vector<LatticeVector> values;

  friend bool operator==(const CharacteristicData&, const CharacteristicData&) = default;
};

/// Characteristic function with values taken up to sign.
struct UnorientedCharacteristic {
  std::vector<SignClass> values;

  friend bool operator==(const UnorientedCharacteristic&, const UnorientedCharacteristic&) = default;
};

/// Checks the unimodularity condition at every vertex.
Diagnostics validate_characteristic(const RotationGraph& g, const CharacteristicData& lam);
Diagnostics validate_characteristic(const RotationGraph& g, const UnorientedCharacteristic& lam);

/// For each dart pq, the bijection E_p -> E_q: transport[pq][slot of e at p] is the dart at q.
struct Connection {
  std::vector<std::array<DartId, 3>> transport;

  DartId operator()(const RotationGraph& g, DartId pq, DartId e) const { return transport[pq][g.slot(e)]; }
};

class TorusGraph {
 public:
  TorusGraph(RotationGraph graph, std::vector<LatticeCovector> axial, std::optional<std::vector<int>> sigma = {});

  const RotationGraph& graph() const { return graph_; }
  const LatticeCovector& axial(DartId d) const { return axial_[d]; }
  const std::vector<LatticeCovector>& axial_map() const { return axial_; }
  bool oriented() const { return sigma_.has_value(); }
  int sigma(VertexId v) const { return (*sigma_)[v]; }
  const std::optional<std::vector<int>>& sigma_map() const { return sigma_; }
  int vertex_count() const { return graph_.vertex_count(); }

  TorusGraph with_sigma(std::optional<std::vector<int>> sigma) const;
  /// Labels replaced by x -> x * m (row-vector action).
  TorusGraph transformed(const Matrix3& m) const;

  /// Lazily computed once; throws Error(NoConnection).
  const Connection& connection() const;

  friend bool operator==(const TorusGraph& a, const TorusGraph& b) {
    return a.graph_.table() == b.graph_.table() && a.axial_ == b.axial_ && a.sigma_ == b.sigma_;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<Connection> connection;
    std::optional<Error> error;
  };

  RotationGraph graph_;
  std::vector<LatticeCovector> axial_;
  std::optional<std::vector<int>> sigma_;
  std::shared_ptr<Cache> cache_;
};

/// Axial function from the dual-pairing equation; throws NotNice, InvalidInput or NotUnimodular.
TorusGraph from_characteristic(const RotationGraph& g, const CharacteristicData& lam);

/// Inverse of from_characteristic; throws InconsistentFacetVector or NotUnimodular.
CharacteristicData recover_characteristic(const TorusGraph& tg);

Diagnostics validate_torus_graph(const TorusGraph& tg);

/// Throws Error(InvalidTorusGraph) with the diagnostics unless tg validates.
void require_valid(const TorusGraph& tg);

/// Throws Error(NoConnection) when the congruence has no solution for some edge.
Connection compute_connection(const TorusGraph& tg);

CharacteristicData lift_signs(const UnorientedCharacteristic& lam, const std::vector<int>& choice);

/// sigma(v0) = +1 propagated along edges; throws NotOrientable.
TorusGraph synthesize_orientation(const TorusGraph& tg);

enum class EquivalenceMode {
  exact,       // labels equal as covectors
  sign_lifts,  // labels equal up to sign, identifying all sign lifts of one characteristic function
};

struct Isomorphism {
  std::vector<VertexId> vertex_map;
  std::vector<DartId> dart_map;
};

std::optional<Isomorphism> is_equivalent(const TorusGraph& a, const TorusGraph& b,
                                         EquivalenceMode mode = EquivalenceMode::exact);

struct TwistedIsomorphism {
  Matrix3 basis_change;  // labels of a, acted on by this matrix, equal labels of b
  Isomorphism map;
};

/// Equivalence up to a GL(3,Z) change of basis of the label lattice.
std::optional<TwistedIsomorphism> is_equivalent_twisted(const TorusGraph& a, const TorusGraph& b);

/// The k-valent subgraphs closed under the connection, k in 0..3.
std::vector<Face> face_subgraphs(const TorusGraph& tg, int k);

/// All face subgraphs plus the empty face.
FacePoset subgraph_poset(const TorusGraph& tg);

std::string to_dot(const TorusGraph& tg);

}  // namespace tgk
