#include "rrs/common/json_util.hpp"

#include <fmt/format.h>

namespace rrs {

Json vec3_to_json(Vec3 v) { return Json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const Json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    throw Error(ErrorCode::ParseError, "key '" + key + "': expected [x, y, z] in meters");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json box_to_json(const Box& b) {
  return Json{{"min", vec3_to_json(b.min)}, {"max", vec3_to_json(b.max)}};
}

Box box_from_json(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains("min") || !j.contains("max")) {
    throw Error(ErrorCode::ParseError, "key '" + key + "': expected {min, max}");
  }
  Box b{vec3_from_json(j["min"], key + ".min"), vec3_from_json(j["max"], key + ".max")};
  if (b.min.x > b.max.x || b.min.y > b.max.y || b.min.z > b.max.z) {
    throw Error(ErrorCode::ValidationError, "box '" + key + "' has min > max");
  }
  return b;
}

std::string hex64(std::uint64_t v) { return fmt::format("{:016x}", v); }

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace rrs
