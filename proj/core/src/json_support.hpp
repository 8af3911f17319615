#pragma once

// Internal helpers shared by the JSON readers. Not installed.

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "orbitspace/error.hpp"

namespace orbitspace::detail {

using Json = nlohmann::json;

inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline void require_object(const Json& j, std::string_view where) {
  if (!j.is_object()) throw ParseError(std::string(where) + ": expected an object");
}

inline void reject_unknown_keys(const Json& j, std::initializer_list<std::string_view> allowed,
                                std::string_view where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ParseError(std::string(where) + ": unknown key '" + key + "'");
  }
}

inline const Json& require_key(const Json& j, const char* key, std::string_view where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(where) + ": missing key '" + key + "'");
  return *it;
}

inline std::string get_string(const Json& j, std::string_view where) {
  if (!j.is_string()) throw ParseError(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

inline bool get_bool(const Json& j, std::string_view where) {
  if (!j.is_boolean()) throw ParseError(std::string(where) + ": expected a boolean");
  return j.get<bool>();
}

inline long long get_int(const Json& j, std::string_view where) {
  if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
  return j.get<long long>();
}

inline double get_number(const Json& j, std::string_view where) {
  if (!j.is_number()) throw ParseError(std::string(where) + ": expected a number");
  return j.get<double>();
}

inline std::set<std::string> get_string_set(const Json& j, std::string_view where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array of ids");
  std::set<std::string> out;
  for (const auto& e : j) out.insert(get_string(e, where));
  return out;
}

}  // namespace orbitspace::detail
