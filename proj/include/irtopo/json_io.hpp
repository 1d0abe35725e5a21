#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "irtopo/category.hpp"
#include "irtopo/embeddings.hpp"
#include "irtopo/space.hpp"
#include "irtopo/spectra.hpp"

// Space file format:
//   { "labels": ["a","b"], "reach": [[0,1]], "opens": [[],[0],[0,1]] }
// "reach" lists off-diagonal pairs (x, y) meaning y lies in the closure of x;
// reflexive pairs may be listed and are ignored. Either key suffices on
// input; when both are given they must describe the same topology. Output
// always carries both.

namespace irtopo::json_io {

using nlohmann::json;

inline Error parse_error(const std::string& field, const std::string& what) {
  return Error(Errc::ParseError, "field \"" + field + "\": " + what);
}

inline json point_set_json(PointSet s) {
  json arr = json::array();
  for (PointId p : s) arr.push_back(p);
  return arr;
}

inline json labelled_set_json(const FiniteSpace& space, PointSet s) {
  json arr = json::array();
  for (PointId p : s) arr.push_back(space.label(p));
  return arr;
}

inline json space_to_json(const FiniteSpace& space) {
  json reach = json::array();
  for (auto [x, y] : space.reach_relation().strict_pairs()) reach.push_back({x, y});
  json opens = json::array();
  for (PointSet o : open_sets(space)) opens.push_back(point_set_json(o));
  return {{"labels", space.labels()}, {"reach", reach}, {"opens", opens}};
}

inline std::vector<std::string> read_labels(const json& doc) {
  if (!doc.is_object()) throw parse_error("<root>", "expected a JSON object");
  if (!doc.contains("labels")) throw parse_error("labels", "missing");
  const json& labels = doc.at("labels");
  if (!labels.is_array()) throw parse_error("labels", "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) throw parse_error("labels[" + std::to_string(i) + "]", "expected a string");
    out.push_back(labels[i].get<std::string>());
  }
  return out;
}

inline PointId read_index(const json& v, const std::string& field, std::size_t n) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw parse_error(field, "expected a nonnegative integer index");
  }
  const auto i = v.get<std::uint64_t>();
  if (i >= n) throw parse_error(field, "index " + std::to_string(i) + " out of range");
  return static_cast<PointId>(i);
}

inline std::vector<std::pair<PointId, PointId>> read_pairs(const json& doc, const std::string& key, std::size_t n) {
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw parse_error(key, "expected an array of [i, j] pairs");
  std::vector<std::pair<PointId, PointId>> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string field = key + "[" + std::to_string(k) + "]";
    if (!arr[k].is_array() || arr[k].size() != 2) throw parse_error(field, "expected a pair [i, j]");
    out.emplace_back(read_index(arr[k][0], field, n), read_index(arr[k][1], field, n));
  }
  return out;
}

inline FiniteSpace space_from_json(const json& doc) {
  auto labels = read_labels(doc);
  const std::size_t n = labels.size();
  if (labels.size() > kMaxPoints) throw Error(Errc::TooManyPoints, std::to_string(n) + " labels");
  std::optional<FiniteSpace> from_reach;
  std::optional<FiniteSpace> from_opens;
  if (doc.contains("reach")) {
    const auto pairs = read_pairs(doc, "reach", n);
    from_reach = FiniteSpace::from_reach(labels, Relation::reflexive_from_pairs(n, pairs));
  }
  if (doc.contains("opens")) {
    const json& arr = doc.at("opens");
    if (!arr.is_array()) throw parse_error("opens", "expected an array of index lists");
    std::vector<PointSet> opens;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string field = "opens[" + std::to_string(k) + "]";
      if (!arr[k].is_array()) throw parse_error(field, "expected an array of indices");
      PointSet s;
      for (const json& v : arr[k]) s.insert(read_index(v, field, n));
      opens.push_back(s);
    }
    from_opens = FiniteSpace::from_open_sets(labels, opens);
  }
  if (!from_reach && !from_opens) throw parse_error("reach", "neither \"reach\" nor \"opens\" is present");
  if (from_reach && from_opens && !(*from_reach == *from_opens)) {
    throw parse_error("opens", "\"reach\" and \"opens\" describe different topologies");
  }
  return from_reach ? *from_reach : *from_opens;
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

/// Poset file: { "labels": [...], "leq": [[i, j], ...] } with i ⊆ j. The
/// diagonal is implied.
inline SpecSpace spec_from_json(const json& doc) {
  auto labels = read_labels(doc);
  const std::size_t n = labels.size();
  if (n > kMaxPoints) throw Error(Errc::TooManyPoints, std::to_string(n) + " labels");
  if (!doc.contains("leq")) throw parse_error("leq", "missing");
  const auto pairs = read_pairs(doc, "leq", n);
  return spec_from_poset(std::move(labels), Relation::reflexive_from_pairs(n, pairs));
}

/// Grid file: { "points": [["0","0"], ["1/2","1"], ...] }. Coordinates are
/// rational strings, plain integers are accepted too.
inline std::vector<GridPoint> grid_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.at("points").is_array()) {
    throw parse_error("points", "expected an array of coordinate lists");
  }
  std::vector<GridPoint> out;
  const json& pts = doc.at("points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array()) throw parse_error(field, "expected a coordinate list");
    GridPoint p;
    for (const json& c : pts[i]) {
      if (c.is_string()) {
        p.coords.push_back(QRational::parse(c.get<std::string>()));
      } else if (c.is_number_integer()) {
        p.coords.emplace_back(c.get<long long>());
      } else {
        throw parse_error(field, "coordinates must be \"p/q\" strings or integers");
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline json cover_to_json(const FiniteSpace& space, const std::vector<PointSet>& sets) {
  json arr = json::array();
  for (PointSet s : sets) arr.push_back(labelled_set_json(space, s));
  return arr;
}

inline json cover_report_json(const FiniteSpace& space, const CoverReport& report) {
  return {{"ir_cat", report.size()},
          {"sense", std::string(to_string(report.sense))},
          {"minimal", report.minimal},
          {"cover", cover_to_json(space, report.sets)},
          {"witnesses", cover_to_json(space, report.witnesses)}};
}

}  // namespace irtopo::json_io
