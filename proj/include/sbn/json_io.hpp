#pragma once

#include <json.hpp>

#include "sbn/bramble.hpp"
#include "sbn/domino.hpp"
#include "sbn/lenient.hpp"
#include "sbn/minor.hpp"
#include "sbn/obstructions.hpp"
#include "sbn/reduction.hpp"

namespace sbn {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
Json to_json(const StrictBramble& b);
Json to_json(const Decomposition& d, DecompositionKind kind);
Json to_json(const DominoReport& r);
Json to_json(const MinorModel& m);
Json to_json(const ObstructionRecord& r);
Json to_json(const GadgetMap& h);

/// Readers throw StructuralError on malformed certificates.
StrictBramble bramble_from_json(const Json& j);
std::pair<Decomposition, DecompositionKind> decomposition_from_json(const Json& j);

}  // namespace sbn
