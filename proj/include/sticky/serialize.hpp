#pragma once

#include "sticky/decorated.hpp"
#include "sticky/dyck_path.hpp"
#include "sticky/flows.hpp"
#include "sticky/planar_map.hpp"
#include "sticky/plane_tree.hpp"
#include "sticky/sticky_tree.hpp"
#include "sticky/tamari.hpp"
#include "sticky/triangulation.hpp"

#include <json.hpp>

#include <string>

namespace sticky {

using json = nlohmann::json;

/// Input that is not valid JSON or does not follow the expected layout.
class ParseError : public Error {
public:
    using Error::Error;
};

/// {"parents":[null,0,...]} in prefix order.
json to_json(const PlaneTree& tree);
PlaneTree tree_from_json(const json& j);

/// Tree JSON plus "labels".
json to_json(const StickyTree& tree);
StickyTree sticky_from_json(const json& j);

/// {"n":e,"alpha":[...],"sigma":[...],"root":d}, darts numbered from 1;
/// the single vertex has n = 0 and root null.
json to_json(const RootedMap& map);
RootedMap map_from_json(const json& j);

/// {"map":..., "apex":v, "base":v, "left_boundary":[...], "right_boundary":[...]},
/// vertices numbered as in RootedMap.
json to_json(const CoreMap& core);
CoreMap core_from_json(const json& j);

/// {"lower":"...","upper":"..."}.
json to_json(const TamariInterval& interval);
TamariInterval interval_from_json(const json& j);

/// {"forest":[{"parents":[...],"inputs":[...]},...]}. Not validated.
json to_json(const ForestFlow& flow);
ForestFlow flow_from_json(const json& j);

/// Tree JSON plus "leaf_labels" keyed by prefix index.
json to_json(const DecoratedTree& tree);
DecoratedTree decorated_from_json(const json& j);

json parse_json(const std::string& text);

std::string to_dot(const RootedMap& map);
std::string to_dot(const PlaneTree& tree, const std::vector<std::string>& node_labels = {});
std::string to_dot(const StickyTree& tree);
std::string to_dot(const DecoratedTree& tree);
std::string to_dot(const ForestFlow& flow);

} // namespace sticky
