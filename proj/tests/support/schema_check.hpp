#pragma once

// Minimal JSON Schema validator for the subset docs/report.schema.json uses:
// type, const, enum, properties, required, additionalProperties, items,
// minItems, minimum, allOf, oneOf and local "#/$defs/..." references.

#include "json.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ouroboros::testing {

class SchemaChecker {
 public:
  using Json = nlohmann::ordered_json;

  explicit SchemaChecker(Json schema) : root_(std::move(schema)) {}

  static SchemaChecker from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema " + path);
    return SchemaChecker(Json::parse(in));
  }

  /// Empty on success, otherwise one message per violation.
  std::vector<std::string> validate(const Json& instance) const {
    std::vector<std::string> errors;
    check(root_, instance, "$", errors);
    return errors;
  }

 private:
  const Json& resolve(const Json& schema) const {
    if (!schema.contains("$ref")) return schema;
    const auto ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return resolve(root_["$defs"].at(ref.substr(prefix.size())));
  }

  static bool has_type(const Json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    if (type == "number") return v.is_number();
    if (type == "integer") {
      if (v.is_number_integer()) return true;
      return v.is_number_float() && v.get<double>() == static_cast<double>(static_cast<long long>(v.get<double>()));
    }
    throw std::runtime_error("unsupported type " + type);
  }

  void check(const Json& raw, const Json& v, const std::string& path, std::vector<std::string>& errors) const {
    const Json& s = resolve(raw);
    if (s.is_boolean()) {
      if (!s.get<bool>()) errors.push_back(path + ": no value allowed");
      return;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) {
        errors.push_back(path + ": expected type " + s["type"].dump() + ", got " + v.dump());
        return;
      }
    }
    if (s.contains("const") && v != s["const"]) errors.push_back(path + ": expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) errors.push_back(path + ": " + v.dump() + " not in " + s["enum"].dump());
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
      errors.push_back(path + ": below minimum");
    }
    if (s.contains("allOf")) {
      for (const auto& sub : s["allOf"]) check(sub, v, path, errors);
    }
    if (s.contains("oneOf")) {
      int matches = 0;
      for (const auto& sub : s["oneOf"]) {
        std::vector<std::string> sub_errors;
        check(sub, v, path, sub_errors);
        if (sub_errors.empty()) ++matches;
      }
      if (matches != 1) errors.push_back(path + ": matched " + std::to_string(matches) + " oneOf branches");
    }
    if (v.is_object()) check_object(s, v, path, errors);
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) {
        errors.push_back(path + ": too few items");
      }
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], path + "[" + std::to_string(i) + "]", errors);
      }
    }
  }

  void check_object(const Json& s, const Json& v, const std::string& path, std::vector<std::string>& errors) const {
    if (s.contains("required")) {
      for (const auto& key : s["required"]) {
        if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
      }
    }
    for (const auto& [key, value] : v.items()) {
      const std::string child = path + "." + key;
      if (s.contains("properties") && s["properties"].contains(key)) {
        check(s["properties"][key], value, child, errors);
      } else if (s.contains("additionalProperties")) {
        check(s["additionalProperties"], value, child, errors);
      }
    }
  }

  Json root_;
};

}  // namespace ouroboros::testing
