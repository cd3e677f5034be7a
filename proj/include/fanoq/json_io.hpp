#pragma once

#include <json.hpp>

#include "fanoq/bridge.hpp"
#include "fanoq/complex3.hpp"
#include "fanoq/polygon.hpp"
#include "fanoq/quiver.hpp"
#include "fanoq/reconstruction.hpp"

namespace fanoq {

// Stable key order throughout, rationals as exact "p" or "p/q" strings.
using Json = nlohmann::ordered_json;

Json to_json(const FanoPolygon& polygon);
FanoPolygon polygon_from_json(const Json& j);

Json to_json(const StandardRefinement& refinement);

Json to_json(const DecoratedQuiver& quiver);
DecoratedQuiver quiver_from_json(const Json& j);

Json to_json(const PolygonalQuiver& pq);

Json to_json(const SingularityContent& content);
Json to_json(const MarkovPoint& point);
Json to_json(const ReconstructionReport& report);
Json to_json(const BlockComplex3& complex);

FanoPolytope3 polytope_from_json(const Json& j);

}  // namespace fanoq
