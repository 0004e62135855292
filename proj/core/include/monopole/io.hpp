#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "monopole/cartan.hpp"
#include "monopole/chart.hpp"
#include "monopole/matrix.hpp"
#include "monopole/poly.hpp"

namespace monopole::io {

using nlohmann::json;

// "A2" or {"dot": [[...]]}
CartanDatum cartan_from_json(const json& j);
json cartan_to_json(const CartanDatum& c);

// {"1": 2, "2": 1}; missing labels mean 0.
Degree degree_from_json(const json& j, std::size_t rank);
json degree_to_json(const Degree& d);
// "2,1"
Degree parse_degree_list(const std::string& text, std::size_t rank);

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

// {"cartan": .., "alpha": {..}, "x": {"1": ["0"], ..}, "y": {..}}
ChartPoint point_from_json(const json& j);
json point_to_json(const ChartPoint& pt);

// {"cartan": .., "alpha": {..}, "p": {"1": [coeffs ascending]}, "q": {..}}
// with optional "roots": {"1": [..]} consumed by from-polys.
PolyChart polychart_from_json(const json& j);
json polychart_to_json(const PolyChart& pc);
std::vector<std::vector<Rat>> roots_from_json(const json& j, const Degree& alpha);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json matrix_to_json(const RatMatrix& m);

}  // namespace monopole::io
