// Minimal JSON-schema checker covering the subset used by the shipped
// report schema: type (single or list), required, properties, items, enum.
#pragma once

#include <json.hpp>

#include <string>

namespace schema_check {

inline bool type_matches(const nlohmann::json& value,
                         const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate(const nlohmann::json& value,
                     const nlohmann::json& schema, std::string* error,
                     const std::string& path = "$") {
  if (schema.contains("type")) {
    const auto& type = schema.at("type");
    bool ok = false;
    if (type.is_string()) {
      ok = type_matches(value, type.get<std::string>());
    } else {
      for (const auto& t : type)
        if (type_matches(value, t.get<std::string>())) ok = true;
    }
    if (!ok) {
      if (error) *error = path + ": type mismatch";
      return false;
    }
  }
  if (value.is_null()) return true;
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& allowed : schema.at("enum"))
      if (allowed == value) ok = true;
    if (!ok) {
      if (error) *error = path + ": not in enum";
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required"))
        if (!value.contains(key.get<std::string>())) {
          if (error)
            *error = path + ": missing required key " +
                     key.get<std::string>();
          return false;
        }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema.at("properties").items())
        if (value.contains(key) &&
            !validate(value.at(key), sub, error, path + "." + key))
          return false;
    }
  }
  if (value.is_array() && schema.contains("items")) {
    std::size_t index = 0;
    for (const auto& element : value) {
      if (!validate(element, schema.at("items"), error,
                    path + "[" + std::to_string(index) + "]"))
        return false;
      ++index;
    }
  }
  return true;
}

}  // namespace schema_check
