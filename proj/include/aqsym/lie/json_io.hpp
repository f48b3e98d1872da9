#pragma once

// JSON export/import of structure constants. Schema:
//   {"schema": "aqsym.lie/1", "dim": d, "labels": [...],
//    "brackets": [[i, j, [[k, "p/q"], ...]], ...]}   (only i < j, nonzero)

#include "aqsym/lie/lie_algebra.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace aqsym {

inline nlohmann::json to_json(const Vec& v) {
  auto a = nlohmann::json::array();
  for (const auto& [k, x] : v.entries) a.push_back({k, to_string(x)});
  return a;
}

inline Vec vec_from_json(const nlohmann::json& a) {
  Vec v;
  for (const auto& e : a) v.entries.emplace_back(e.at(0).get<Index>(), parse_rat(e.at(1).get<std::string>()));
  v.normalize();
  return v;
}

inline nlohmann::json to_json(const LieAlgebra& g) {
  nlohmann::json j;
  j["schema"] = "aqsym.lie/1";
  j["dim"] = g.dim();
  j["labels"] = g.labels();
  auto br = nlohmann::json::array();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b)
      if (!g.structure(a, b).empty()) br.push_back({a, b, to_json(g.structure(a, b))});
  j["brackets"] = br;
  return j;
}

inline LieAlgebra lie_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != "aqsym.lie/1") throw std::invalid_argument("lie_from_json: unknown schema");
  const std::size_t d = j.at("dim").get<std::size_t>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
  for (const auto& e : j.at("brackets")) {
    auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
    if (a >= d || b >= d || a == b) throw std::invalid_argument("lie_from_json: bad index");
    Vec v = vec_from_json(e.at(2));
    table[b][a] = Rat(-1) * v;
    table[a][b] = std::move(v);
  }
  return LieAlgebra(std::move(labels), std::move(table));
}

}  // namespace aqsym
