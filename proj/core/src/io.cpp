#include "monopole/io.hpp"

#include <sstream>
#include <string>

#include "monopole/error.hpp"

namespace monopole::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

std::size_t label_to_index(const std::string& label, std::size_t rank) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(label, &pos);
  } catch (const std::exception&) {
    bad("color label '" + label + "' is not a positive integer");
  }
  if (pos != label.size() || v == 0 || v > rank) bad("color label '" + label + "' out of range 1.." + std::to_string(rank));
  return v - 1;
}

std::vector<Rat> rat_list(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& v : j) out.push_back(rat_from_json(v));
  return out;
}

json rat_list_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat_to_json(r));
  return out;
}

// {"1": [...], "2": [...]} -> per color lists (missing colors empty)
std::vector<std::vector<Rat>> colored_lists(const json& j, std::size_t rank) {
  if (!j.is_object()) bad("expected an object keyed by color label");
  std::vector<std::vector<Rat>> out(rank);
  for (const auto& [key, value] : j.items()) out[label_to_index(key, rank)] = rat_list(value);
  return out;
}

}  // namespace

CartanDatum cartan_from_json(const json& j) {
  if (j.is_string()) return CartanDatum::from_name(j.get<std::string>());
  if (j.is_object() && j.contains("dot")) {
    try {
      auto m = j.at("dot").get<std::vector<std::vector<int>>>();
      return CartanDatum::from_dot(std::move(m));
    } catch (const json::exception& e) {
      bad(std::string("malformed dot matrix: ") + e.what());
    }
  }
  bad("cartan must be a type name or {\"dot\": [[...]]}");
}

json cartan_to_json(const CartanDatum& c) {
  if (!c.name().empty()) return c.name();
  return json{{"dot", c.dot_matrix()}};
}

Degree degree_from_json(const json& j, std::size_t rank) {
  std::vector<int> a(rank, 0);
  if (j.is_array()) {
    if (j.size() != rank) bad("alpha array must have " + std::to_string(rank) + " entries");
    for (std::size_t i = 0; i < rank; ++i) a[i] = j[i].get<int>();
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number_integer()) bad("alpha entries must be integers");
      a[label_to_index(key, rank)] = value.get<int>();
    }
  } else {
    bad("alpha must be an object keyed by color label");
  }
  return Degree(std::move(a));
}

json degree_to_json(const Degree& d) {
  json out = json::object();
  for (std::size_t i = 0; i < d.size(); ++i) out[std::to_string(i + 1)] = d[i];
  return out;
}

Degree parse_degree_list(const std::string& text, std::size_t rank) {
  std::vector<int> a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      bad("degree entry '" + item + "' is not an integer");
    }
    if (pos != item.size()) bad("degree entry '" + item + "' is not an integer");
    if (v < 0) bad("degree entries must be nonnegative");
    a.push_back(v);
  }
  if (a.size() != rank) bad("degree '" + text + "' must have " + std::to_string(rank) + " entries");
  return Degree(std::move(a));
}

json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.dump(), 10));
  bad("rationals are written as strings \"p\" or \"p/q\"");
}

ChartPoint point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cartan") || !j.contains("alpha") || !j.contains("x") || !j.contains("y"))
    bad("chart point needs cartan, alpha, x and y");
  const CartanDatum cartan = cartan_from_json(j.at("cartan"));
  const Degree alpha = degree_from_json(j.at("alpha"), cartan.rank());
  return ChartPoint::make(cartan, alpha, colored_lists(j.at("x"), cartan.rank()), colored_lists(j.at("y"), cartan.rank()));
}

json point_to_json(const ChartPoint& pt) {
  json x = json::object(), y = json::object();
  for (std::size_t i = 0; i < pt.alpha().size(); ++i) {
    x[std::to_string(i + 1)] = rat_list_to_json(pt.x_block(i));
    y[std::to_string(i + 1)] = rat_list_to_json(pt.y_block(i));
  }
  return json{{"cartan", cartan_to_json(pt.cartan())}, {"alpha", degree_to_json(pt.alpha())}, {"x", x}, {"y", y}};
}

json poly_to_json(const Poly& p) { return rat_list_to_json(p.coefficients()); }

Poly poly_from_json(const json& j) { return Poly(rat_list(j)); }

PolyChart polychart_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cartan") || !j.contains("alpha") || !j.contains("p") || !j.contains("q"))
    bad("polychart needs cartan, alpha, p and q");
  PolyChart pc{cartan_from_json(j.at("cartan")), Degree(), {}, {}};
  pc.alpha = degree_from_json(j.at("alpha"), pc.cartan.rank());
  for (const auto& list : colored_lists(j.at("p"), pc.cartan.rank())) pc.p.emplace_back(list);
  for (const auto& list : colored_lists(j.at("q"), pc.cartan.rank())) pc.q.emplace_back(list);
  return pc;
}

json polychart_to_json(const PolyChart& pc) {
  json p = json::object(), q = json::object();
  for (std::size_t i = 0; i < pc.alpha.size(); ++i) {
    p[std::to_string(i + 1)] = poly_to_json(pc.p[i]);
    q[std::to_string(i + 1)] = poly_to_json(pc.q[i]);
  }
  return json{{"cartan", cartan_to_json(pc.cartan)}, {"alpha", degree_to_json(pc.alpha)}, {"p", p}, {"q", q}};
}

std::vector<std::vector<Rat>> roots_from_json(const json& j, const Degree& alpha) { return colored_lists(j, alpha.size()); }

json matrix_to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace monopole::io
