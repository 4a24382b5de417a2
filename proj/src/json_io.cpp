#include "exc/json_io.hpp"

#include <sstream>

namespace exc {

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RatMatrix matrix_from_json(const Json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) throw std::domain_error("matrix_from_json: row count mismatch");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(entries[r].size()) != cols) throw std::domain_error("matrix_from_json: column count mismatch");
    for (int c = 0; c < cols; ++c) {
      const Json& e = entries[r][c];
      m.at(r, c) = e.is_string() ? rational_from_string(e.get<std::string>()) : Rational(e.get<long>());
    }
  }
  return m;
}

Json exterior_to_json(const ExteriorVector& v) {
  Json coeffs = Json::object();
  for (const auto& [s, c] : v.coeffs()) {
    std::string key;
    for (size_t i = 0; i < s.size(); ++i) key += (i ? "," : "") + std::to_string(s[i]);
    coeffs[key] = rational_to_string(c);
  }
  return Json{{"degree", v.degree()}, {"dim", v.dim()}, {"coeffs", std::move(coeffs)}};
}

ExteriorVector exterior_from_json(const Json& j) {
  ExteriorVector v(j.at("degree").get<int>(), j.at("dim").get<int>());
  for (const auto& [key, val] : j.at("coeffs").items()) {
    Subset s;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) s.push_back(std::stoi(part));
    v.add_term(s, rational_from_string(val.get<std::string>()));
  }
  return v;
}

Json intvec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

IntVec intvec_from_json(const Json& j) {
  IntVec v;
  for (const auto& e : j) v.emplace_back(e.is_string() ? Int(e.get<std::string>(), 10) : Int(e.get<long>()));
  return v;
}

Json cone_to_json(const PointedCone& c) {
  Json rays = Json::array(), facets = Json::array(), incidence = Json::array();
  for (const auto& r : c.rays()) rays.push_back(intvec_to_json(r));
  for (const auto& f : c.facets()) facets.push_back(intvec_to_json(f));
  for (const auto& b : c.incidence()) {
    Json row = Json::array();
    for (int i : b.bits()) row.push_back(i);
    incidence.push_back(std::move(row));
  }
  return Json{{"dim", c.dim()}, {"rays", std::move(rays)}, {"facets", std::move(facets)},
              {"incidence", std::move(incidence)}};
}

Json graph_to_json(const EdgeGraph& g) {
  Json a = Json::array();
  for (const auto& [x, y] : g.edges()) a.push_back(Json::array({x, y}));
  return a;
}

EdgeGraph graph_from_json(const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return EdgeGraph(std::move(edges));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::domain_error("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace exc
