#pragma once

// Decomposition of a torus graph into connected sums of basic pieces:
// S6 (2 vertices), Simplex (K4), SB(eps, a, b) (4 vertices with two double
// edges) and QT (simple and 3-connected).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "tgk/surgery.hpp"

namespace tgk {

enum class LeafKind { S6, Simplex, SB, QT };

std::string_view to_string(LeafKind kind);

struct SBParams {
  int eps = 1;
  Integer a;
  Integer b;

  friend bool operator==(const SBParams&, const SBParams&) = default;
};

struct Leaf {
  LeafKind kind;
  TorusGraph witness;
  std::optional<SBParams> sb;  // set for SB leaves
};

struct DecompositionTree {
  std::optional<Leaf> leaf;
  std::optional<GluingRecord> record;
  std::shared_ptr<const DecompositionTree> left;
  std::shared_ptr<const DecompositionTree> right;

  static DecompositionTree make_leaf(Leaf leaf);
  static DecompositionTree make_node(GluingRecord record, DecompositionTree left, DecompositionTree right);

  bool is_leaf() const { return leaf.has_value(); }
  int leaf_count() const;
  int internal_count() const;
  std::vector<const Leaf*> leaves() const;
  /// "S6" for a lone S6 leaf, otherwise counts such as "QT×2 SB×1"; Simplex counts as QT.
  std::string summary() const;
};

/// Reassembles the tree by connected sums; vertices keep the numbering of the graph that was split.
TorusGraph fold(const DecompositionTree& tree);

std::optional<Leaf> recognize_basic(const TorusGraph& tg);

/// Normal form of an SB-shaped graph under change of basis; (a, b) is the
/// lexicographically smallest member of its orbit. Throws NotSBShaped.
SBParams normalize_sb_params(const TorusGraph& tg);

/// A split together with the side (0 = left, 1 = right) holding the SB piece.
struct Reduction {
  SplitResult parts;
  int sb_side = 0;
};

/// Splits off the SB block around the double edge with the lowest vertex.
/// Throws NoMultipleEdge.
Reduction reduce_multi_edge(const TorusGraph& tg);

/// Two consecutive splits around a 2-edge cut: `outer` separates one side,
/// `inner` splits the other part of `outer` into the SB piece and the rest.
struct SingularReduction {
  Reduction outer;  // sb_side marks the part that `inner` splits
  Reduction inner;
  FacetId singular_facet = -1;
  int singular_facet_size = 0;
};

/// Throws Already3Connected, InternalInvariantViolation.
SingularReduction reduce_singular_facet(const TorusGraph& tg);

struct ClassifyOptions {
  EquivalenceMode mode = EquivalenceMode::exact;
  bool verify = true;  // fold the tree and compare with the input
};

/// Throws InvalidInput for inputs that do not validate, NotOrientable, and
/// InternalInvariantViolation if the verification fails.
DecompositionTree classify(const TorusGraph& tg, const ClassifyOptions& options = {});

struct EnumerateOptions {
  std::int64_t bound = 1;
  int shards = 1;
  int shard = 0;
  std::optional<EquivalenceMode> dedup;
};

using SmallVector = std::array<std::int64_t, 3>;

/// Every assignment with coordinates in [-bound, bound] that is unimodular at
/// every vertex, in fixed-width arithmetic; the callback returns false to stop.
/// Shard i of n keeps the assignments whose first two facet choices have
/// combined index congruent to i mod n.
void for_each_characteristic(const RotationGraph& g, const EnumerateOptions& options,
                             const std::function<bool(std::span<const SmallVector>)>& visit);

/// Streaming version over CharacteristicData with optional deduplication of
/// the induced torus graphs.
void enumerate_characteristic(const RotationGraph& g, const EnumerateOptions& options,
                              const std::function<bool(const CharacteristicData&)>& visit);

std::vector<CharacteristicData> enumerate_characteristic(const RotationGraph& g, const EnumerateOptions& options);

}  // namespace tgk
