#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "urykat/approximant.hpp"
#include "urykat/isometry.hpp"
#include "urykat/katetov.hpp"
#include "urykat/metric_space.hpp"

namespace urykat {

using Json = nlohmann::json;

// {"points": [...], "dist": [["0","1/2",...],...], "pseudometric": false}
Json space_to_json(const MetricSpace& space);
SpacePtr space_from_json(const Json& j);

// {"space": <inline space or path string>, "values": [...]}
Json function_to_json(const KatetovFunction& f);
KatetovFunction function_from_json(const Json& j, const std::string& base_dir = "");

Json grid_to_json(const Grid& grid);
Grid grid_from_json(const Json& j);

Json approximant_to_json(const Approximant& a);
Approximant approximant_from_json(const Json& j);

// Groups and element subsets as cycle-notation strings.
Json group_to_json(const IsometryGroup& group);
Json element_set_to_json(const IsometryGroup& group, const ElementSet& set);
ElementSet element_set_from_json(const IsometryGroup& group, const Json& j);
GroupPtr subgroup_from_json(SpacePtr space, const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// 64-bit FNV-1a of raw bytes, as fixed-width hex; used for provenance hashes.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace urykat
