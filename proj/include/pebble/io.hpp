// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PEBBLE_IO_HPP
#define PEBBLE_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pebble/error.hpp"
#include "pebble/geometry.hpp"
#include "pebble/hypergraph.hpp"
#include "pebble/oracle.hpp"
#include "pebble/params.hpp"
#include "pebble/recognition.hpp"

namespace pebble {

using json = nlohmann::ordered_json;

namespace detail {

inline json parse_document(const std::string& document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, e.what());
  }
}

inline std::vector<std::string> string_array(const json& doc, const char* key) {
  if (!doc.contains(key)) throw error(errc::parse_error, std::string("missing \"") + key + "\"");
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw error(errc::parse_error, std::string("\"") + key + "\" is not an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw error(errc::parse_error, std::string("non-string in \"") + key + "\"");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// Reads `{"points": [...], "lines": [...], "incidences": [[p, l], ...]}`.
inline incidence_geometry load_geometry(const std::string& document) {
  const json doc = detail::parse_document(document);
  if (!doc.is_object()) throw error(errc::parse_error, "geometry document must be an object");
  auto points = detail::string_array(doc, "points");
  auto lines = detail::string_array(doc, "lines");
  if (!doc.contains("incidences") || !doc.at("incidences").is_array()) {
    throw error(errc::parse_error, "missing or malformed \"incidences\"");
  }
  std::vector<std::pair<std::string, std::string>> incs;
  for (const auto& pair : doc.at("incidences")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw error(errc::parse_error, "incidence must be a [point, line] pair of strings");
    }
    incs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return incidence_geometry::from_names(std::move(points), std::move(lines), incs);
}

inline json incidence_list_json(const incidence_geometry& g, const std::vector<incidence>& incs) {
  json arr = json::array();
  for (const auto& inc : incs) arr.push_back({g.point_name(inc.point), g.line_name(inc.line)});
  return arr;
}

inline json geometry_to_json(const incidence_geometry& g) {
  return json{{"points", g.points()},
              {"lines", g.lines()},
              {"incidences", incidence_list_json(g, g.incidences())}};
}

/// Reads `{"vertices": [...], "edges": [[v, ...], ...]}`.
inline hypergraph load_hypergraph(const std::string& document) {
  const json doc = detail::parse_document(document);
  if (!doc.is_object()) throw error(errc::parse_error, "hypergraph document must be an object");
  auto vertices = detail::string_array(doc, "vertices");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) {
    throw error(errc::parse_error, "missing or malformed \"edges\"");
  }
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array()) throw error(errc::parse_error, "hyperedge must be an array");
    std::vector<std::string> names;
    for (const auto& v : e) {
      if (!v.is_string()) throw error(errc::parse_error, "hyperedge member must be a string");
      names.push_back(v.get<std::string>());
    }
    edges.push_back(std::move(names));
  }
  return hypergraph::from_names(std::move(vertices), edges);
}

inline json hypergraph_to_json(const hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges()) {
    json names = json::array();
    for (auto v : e) names.push_back(h.vertices()[v]);
    edges.push_back(std::move(names));
  }
  return json{{"vertices", h.vertices()}, {"edges", std::move(edges)}};
}

inline json params_to_json(const sparsity_params& p) {
  return json{{"lambda", p.lambda}, {"k1", p.k1}, {"k2", p.k2}, {"l", p.l}};
}

inline json support_json(const incidence_geometry& g, const support& s) {
  json pts = json::array(), lns = json::array();
  for (auto p : s.points) pts.push_back(g.point_name(p));
  for (auto l : s.lines) lns.push_back(g.line_name(l));
  return json{{"points", std::move(pts)}, {"lines", std::move(lns)}};
}

/// `{"status", "remaining_pebbles", "witness", "accepted"}`.
inline json verdict_to_json(const incidence_geometry& g, const verdict& v) {
  json out{{"status", status_name(v.status)}, {"remaining_pebbles", v.remaining_pebbles}};
  if (v.witness) {
    json w = support_json(g, v.witness->where);
    w["deficit"] = v.witness->deficit;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  if (v.accepted) {
    std::vector<incidence> incs;
    for (auto i : *v.accepted) incs.push_back(g.incidences()[i]);
    out["accepted"] = incidence_list_json(g, incs);
  } else {
    out["accepted"] = nullptr;
  }
  return out;
}

inline json matroid_report_to_json(const matroid_report& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"b1", incidence_list_json(r.ground, v.first_basis)},
                          {"b2", incidence_list_json(r.ground, v.second_basis)},
                          {"element", {r.ground.point_name(v.element.point),
                                       r.ground.line_name(v.element.line)}}});
  }
  return json{{"bases_count", r.bases_count},
              {"exchange_violations", std::move(violations)},
              {"exchange_violation_count", r.violation_count}};
}

inline json block_report_to_json(const incidence_geometry& g, const std::vector<support>& blocks,
                                 const block_closure_report& rep) {
  json bl = json::array();
  for (const auto& b : blocks) bl.push_back(support_json(g, b));
  json viol = json::array();
  for (const auto& v : rep.violations) {
    viol.push_back({{"first", support_json(g, v.first)},
                    {"second", support_json(g, v.second)},
                    {"union_is_block", v.union_is_block},
                    {"intersection_is_block", v.intersection_is_block}});
  }
  return json{{"blocks", std::move(bl)},
              {"pairs_checked", rep.pairs_checked},
              {"closure_violations", std::move(viol)}};
}

}  // namespace pebble

#endif  // PEBBLE_IO_HPP
