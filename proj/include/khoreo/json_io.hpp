// JSON serialization of tables, reports, and diagrams.
#pragma once

#include <json.hpp>

#include "khoreo/complex.hpp"
#include "khoreo/lee.hpp"
#include "khoreo/thinness.hpp"
#include "khoreo/verify.hpp"

namespace khoreo {

inline nlohmann::json to_json(const BigradedTable& t) {
  nlohmann::json ranks = nlohmann::json::array();
  for (auto& [k, v] : t.ranks) ranks.push_back({k.first, k.second, v});
  return {{"ranks", ranks}};
}

inline nlohmann::json to_json(const LeeTable& t) {
  nlohmann::json dims = nlohmann::json::array();
  for (auto& [i, v] : t.dims) dims.push_back({i, v});
  return {{"lee", dims}};
}

inline nlohmann::json to_json(const Diagram& d) {
  nlohmann::json crossings = nlohmann::json::array();
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossing(i);
    crossings.push_back({{"arcs", c.a}, {"sign", d.sign(i)}});
  }
  nlohmann::json comps = nlohmann::json::array();
  for (int ci = 0; ci < d.component_count(); ++ci)
    comps.push_back({{"arcs", d.components()[ci].arcs}, {"reversed", d.reversed(ci)}});
  return {{"pd", d.pd_text()},
          {"crossings", crossings},
          {"components", comps},
          {"unknot_components", d.unknot_components()}};
}

inline nlohmann::json to_json(const ThinnessReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (auto& [i, j, v] : r.violations) violations.push_back({i, j, v});
  return {{"is_thin", r.is_thin},
          {"s", r.s},
          {"top", {r.top.first, r.top.second}},
          {"bottom", {r.bottom.first, r.bottom.second}},
          {"corner_coeffs", {r.corner_coeffs.first, r.corner_coeffs.second}},
          {"corners_ok", r.corners_ok},
          {"violations", violations}};
}

inline nlohmann::json to_json(const PairingResult& r) {
  nlohmann::json exceptional = nlohmann::json::array();
  for (auto& [e, m] : r.exceptional) exceptional.push_back({e, m});
  nlohmann::json out{{"ok", r.ok}, {"exceptional", exceptional}};
  if (r.ok)
    out["kh_prime"] = r.kh_prime.str("z");
  else
    out["reason"] = r.reason;
  return out;
}

inline nlohmann::json to_json(const std::vector<PropertyResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : results) {
    nlohmann::json item{{"name", r.name}, {"pass", r.pass}};
    if (!r.detail.empty()) item["detail"] = r.detail;
    arr.push_back(item);
  }
  return {{"properties", arr}};
}

}  // namespace khoreo
