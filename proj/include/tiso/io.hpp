#pragma once

// JSON and DOT renderings of classes, graphs and Borels.

#include <string>

#include "json.hpp"
#include "tiso/affine.hpp"
#include "tiso/orbit.hpp"
#include "tiso/result.hpp"

namespace tiso {

using Json = nlohmann::json;

Json pair_to_json(const RectShape& shape, const AnchoredPair& pair);
Json class_to_json(const RectShape& shape, const OrbitClass& cls);
/// Rebuilds the class from its canonical rep and checks the listed reps match.
Result<OrbitClass> class_from_json(const RectShape& shape, const Json& json);

/// {"n","m","mode","window","classes":[...],"edges":[{"src","dst","root"}]}.
Json graph_to_json(const MorphismGraph& graph);
Result<MorphismGraph> graph_from_json(const Json& json);

/// Node ids are "3,1@0" and labels "(3,1)^0". Hasse graphs put each degree on
/// its own rank.
std::string graph_to_dot(const MorphismGraph& graph);

/// {"nodes":[{"root","grey"}],"deleted","local":{"partition","k"}}. The local
/// shuffle is recovered from the partition.
Json borel_to_json(const RectShape& shape, const FiniteBorel& borel);
Result<FiniteBorel> borel_from_json(const RectShape& shape, const Json& json);

}  // namespace tiso
