#pragma once

#include <json.hpp>

#include "anum/bigint.hpp"
#include "anum/decomposition.hpp"
#include "anum/engine.hpp"
#include "anum/graph.hpp"
#include "anum/sequence_shape.hpp"

namespace anum {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonFormat = 1;

/// JSON number when the value fits in int64, decimal string otherwise.
Json to_json(const BigInt& v);
Json to_json(const ASequence& seq);
/// 1-based label array.
Json to_json(VertexSet s);
Json to_json(EdgePair e);
Json to_json(const SequenceShape& shape);

/// {"n", "edges" (1-based pairs), "graph6"}.
Json graph_json(const Graph& g);

Json decomposition_json(const DecompositionReport& report);

}  // namespace anum
