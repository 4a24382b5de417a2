#pragma once

#include <string>

#include "json.hpp"

#include "exc/amplituhedron.hpp"
#include "exc/matroid.hpp"

namespace exc {

using Json = nlohmann::json;

// Rationals serialize as "p/q" ("p" when q = 1); matrices row major with
// string entries; integer vectors as string arrays to stay overflow-safe.
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json exterior_to_json(const ExteriorVector& v);
ExteriorVector exterior_from_json(const Json& j);

Json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j);

Json cone_to_json(const PointedCone& c);

Json graph_to_json(const EdgeGraph& g);
EdgeGraph graph_from_json(const Json& j);

// Parse with a byte-offset error message on malformed input.
Json parse_json(const std::string& text);

}  // namespace exc
