#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rrs/common/geometry.hpp"

namespace rrs {

using Json = nlohmann::json;

Json vec3_to_json(Vec3 v);
// [x, y, z]; throws ParseError naming `key` otherwise.
Vec3 vec3_from_json(const Json& j, const std::string& key);
Json box_to_json(const Box& b);
Box box_from_json(const Json& j, const std::string& key);

// Typed member lookup with "key path" context in the ParseError message.
template <class T>
T require(const Json& obj, const std::string& key, const std::string& context);
template <class T>
T optional_or(const Json& obj, const std::string& key, T fallback, const std::string& context);

std::string hex64(std::uint64_t v);
std::uint64_t fnv1a64(std::string_view s);

}  // namespace rrs

#include "rrs/common/json_util_impl.hpp"
