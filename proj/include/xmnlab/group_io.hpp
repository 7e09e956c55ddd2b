#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "xmnlab/group.hpp"

namespace xmnlab {

// Reads { "name": str, "degree": int, "generators": [...] } where each
// generator is either an image array or a cycle-notation string.
Group group_from_json(const nlohmann::json& doc, std::size_t order_cap = default_order_cap());

Group load_group_file(const std::filesystem::path& path,
                      std::size_t order_cap = default_order_cap());

// Inverse of group_from_json, generators as image arrays.
nlohmann::json group_to_json(const Group& group);

}  // namespace xmnlab
