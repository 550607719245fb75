#pragma once

#include <exception>

#include "rrs/common/error.hpp"

namespace rrs {

template <class T>
T require(const Json& obj, const std::string& key, const std::string& context) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::ParseError, "missing key '" + context + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "key '" + context + key + "': " + e.what());
  }
}

template <class T>
T optional_or(const Json& obj, const std::string& key, T fallback, const std::string& context) {
  if (!obj.is_object() || !obj.contains(key) || obj.at(key).is_null()) return fallback;
  return require<T>(obj, key, context);
}

}  // namespace rrs
