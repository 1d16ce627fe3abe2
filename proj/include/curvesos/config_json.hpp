#pragma once

#include <json.hpp>

#include "curvesos/configuration.hpp"

namespace curvesos {

using Json = nlohmann::ordered_json;

Json to_json(const Component& c);
Json to_json(const IntersectionPoint& p);
Json to_json(const CurveConfiguration& config);

CurveConfiguration configuration_from_json(const Json& j);

// Element given per component: object keyed by id string, or array in component order.
std::map<int, ComponentFunction> element_from_json(const CurveConfiguration& config, const Json& j);
Json element_to_json(const CurveConfiguration& config, const std::map<int, ComponentFunction>& e);

}  // namespace curvesos
