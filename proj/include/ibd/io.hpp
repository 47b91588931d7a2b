#pragma once

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ibd/distribution.hpp"
#include "ibd/errors.hpp"

namespace ibd {

using Json = nlohmann::ordered_json;

/// Logarithm base used for display only; everything internal is in nats.
enum class LogBase { kNatural, kTwo, kTen };

inline LogBase parse_log_base(const std::string& text) {
  if (text == "e") return LogBase::kNatural;
  if (text == "2") return LogBase::kTwo;
  if (text == "10") return LogBase::kTen;
  throw ParseError("unknown log base '" + text + "' (expected e, 2 or 10)");
}

/// Converts a value in nats for display. Normalized (dimensionless)
/// quantities must never pass through here.
inline double display_value(double nats, LogBase base) {
  switch (base) {
    case LogBase::kNatural: return nats;
    case LogBase::kTwo: return nats / std::log(2.0);
    case LogBase::kTen: return nats / std::log(10.0);
  }
  return nats;
}

inline Json joint_to_json(const JointDistribution& joint) {
  Json probs = Json::array();
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < joint.cols(); ++j) row.push_back(joint.at(i, j));
    probs.push_back(std::move(row));
  }
  return Json{{"labels_x", joint.labels_x()}, {"labels_y", joint.labels_y()}, {"probs", probs}};
}

inline Json triple_to_json(const TripleDistribution& t) {
  Json probs = Json::array();
  for (std::size_t i = 0; i < t.size_x(); ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < t.size_y(); ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < t.size_z(); ++k) row.push_back(t.at(i, j, k));
      plane.push_back(std::move(row));
    }
    probs.push_back(std::move(plane));
  }
  return Json{{"labels_x", t.labels_x()},
              {"labels_y", t.labels_y()},
              {"labels_z", t.labels_z()},
              {"probs", probs}};
}

namespace detail {

inline std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing or non-array field '") + key + "'");
  }
  std::vector<std::string> out;
  for (const auto& item : j[key]) {
    if (!item.is_string()) throw ParseError(std::string("non-string label under '") + key + "'");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline double number(const Json& j) {
  if (!j.is_number()) throw ParseError("probability entry is not a number");
  return j.get<double>();
}

}  // namespace detail

inline JointDistribution joint_from_json(const Json& j) {
  auto labels_x = detail::string_list(j, "labels_x");
  auto labels_y = detail::string_list(j, "labels_y");
  if (!j.contains("probs") || !j["probs"].is_array()) {
    throw ParseError("missing or non-array field 'probs'");
  }
  std::vector<double> flat;
  for (const auto& row : j["probs"]) {
    if (!row.is_array() || row.size() != labels_y.size()) {
      throw ParseError("joint 'probs' rows must match labels_y length");
    }
    for (const auto& p : row) flat.push_back(detail::number(p));
  }
  if (flat.size() != labels_x.size() * labels_y.size()) {
    throw ParseError("joint 'probs' must have one row per labels_x entry");
  }
  return JointDistribution(std::move(labels_x), std::move(labels_y), std::move(flat));
}

inline TripleDistribution triple_from_json(const Json& j) {
  auto labels_x = detail::string_list(j, "labels_x");
  auto labels_y = detail::string_list(j, "labels_y");
  auto labels_z = detail::string_list(j, "labels_z");
  if (!j.contains("probs") || !j["probs"].is_array()) {
    throw ParseError("missing or non-array field 'probs'");
  }
  std::vector<double> flat;
  for (const auto& plane : j["probs"]) {
    if (!plane.is_array() || plane.size() != labels_y.size()) {
      throw ParseError("triple 'probs' planes must match labels_y length");
    }
    for (const auto& row : plane) {
      if (!row.is_array() || row.size() != labels_z.size()) {
        throw ParseError("triple 'probs' rows must match labels_z length");
      }
      for (const auto& p : row) flat.push_back(detail::number(p));
    }
  }
  if (flat.size() != labels_x.size() * labels_y.size() * labels_z.size()) {
    throw ParseError("triple 'probs' must have one plane per labels_x entry");
  }
  return TripleDistribution(std::move(labels_x), std::move(labels_y), std::move(labels_z),
                            std::move(flat));
}

inline Json json_from_stream(std::istream& in, const std::string& source) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline JointDistribution load_joint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return joint_from_json(json_from_stream(in, path));
}

inline TripleDistribution load_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return triple_from_json(json_from_stream(in, path));
}

/// Minimal RFC4180-style CSV row splitter: quoted fields with doubled
/// quotes, no embedded newlines.
inline std::vector<std::string> split_csv_row(const std::string& line, const std::string& source,
                                              std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      if (!field.empty()) {
        throw ParseError(source + ":" + std::to_string(line_no) + ": stray quote inside field");
      }
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (quoted) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": unterminated quoted field");
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace ibd
