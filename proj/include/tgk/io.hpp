#pragma once

// JSON and DOT serialization. Integers are written as JSON numbers when they
// fit in 64 bits and as decimal strings otherwise; both forms are accepted.

#include <json.hpp>

#include "tgk/classifier.hpp"

namespace tgk::io {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const LatticeVector& v);
Json to_json(const LatticeCovector& v);
LatticeVector vector_from_json(const Json& j);
LatticeCovector covector_from_json(const Json& j);

/// {"vertices": N, "rotations": [[d,d,d], ...], "edges": [[a,b], ...]}
Json to_json(const RotationGraph& g);
RotationGraph graph_from_json(const Json& j);

/// Graph schema plus "axial": {"dart": [x,y,z]} and optional "sigma": {"vertex": +-1}.
Json to_json(const TorusGraph& tg);
TorusGraph torus_graph_from_json(const Json& j);

/// Array of facet vectors in facet order.
Json to_json(const CharacteristicData& lam);
CharacteristicData characteristic_from_json(const Json& j);

Json to_json(const GluingRecord& record);
GluingRecord record_from_json(const Json& j);

Json to_json(const Leaf& leaf);
Leaf leaf_from_json(const Json& j);

/// {"leaf": {...}} | {"node": {"record": {...}, "left": ..., "right": ...}}
Json to_json(const DecompositionTree& tree);
DecompositionTree tree_from_json(const Json& j);

Json to_json(const Isomorphism& iso);

std::string tree_to_dot(const DecompositionTree& tree);

}  // namespace tgk::io
