#pragma once

#include <cstddef>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "editkit/errors.hpp"

namespace editkit::jsonl {

using Json = nlohmann::json;

// Calls fn(object, line_number) for every non-blank line of a JSONL file.
template <class Fn>
void for_each(const std::string& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": invalid JSON: " + e.what());
    }
    if (!obj.is_object()) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": expected a JSON object");
    }
    fn(obj, line_no);
  }
}

inline std::string where(const std::string& path, std::size_t line_no) {
  return path + ":" + std::to_string(line_no);
}

inline const Json& require(const Json& obj, std::string_view field,
                           const std::string& path, std::size_t line_no) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw InputError(where(path, line_no) + ": missing field \"" +
                     std::string(field) + "\"");
  }
  return *it;
}

inline std::string require_string(const Json& obj, std::string_view field,
                                  const std::string& path,
                                  std::size_t line_no) {
  const Json& v = require(obj, field, path, line_no);
  if (!v.is_string()) {
    throw InputError(where(path, line_no) + ": field \"" + std::string(field) +
                     "\" must be a string");
  }
  return v.get<std::string>();
}

inline double require_number(const Json& obj, std::string_view field,
                             const std::string& path, std::size_t line_no) {
  const Json& v = require(obj, field, path, line_no);
  if (!v.is_number()) {
    throw InputError(where(path, line_no) + ": field \"" + std::string(field) +
                     "\" must be a number");
  }
  return v.get<double>();
}

inline void write_line(std::ostream& out, const Json& obj) {
  out << obj.dump() << '\n';
}

}  // namespace editkit::jsonl
