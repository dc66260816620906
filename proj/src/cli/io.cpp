#include "adhm/cli/io.hpp"

#include <sstream>
#include <stdexcept>

namespace adhm::cli {

using nlohmann::json;

json table_to_json(const TableDocument& doc) {
  json invariants = json::array();
  for (const auto& [c, a] : doc.table.entries()) {
    invariants.push_back({{"r", c.r}, {"e", c.e}, {"v", c.v}, {"value", to_string(a)}});
  }
  return json{
      {"geometry", {{"genus", doc.geometry.genus}, {"d1", doc.geometry.d1}, {"d2", doc.geometry.d2}}},
      {"bounds", {{"rmax", doc.r_max}, {"emax", doc.e_max}}},
      {"invariants", std::move(invariants)},
  };
}

std::string table_to_json_text(const TableDocument& doc) { return table_to_json(doc).dump(2) + "\n"; }

TableDocument table_from_json_text(std::string_view text) {
  try {
    const json j = json::parse(text);
    const json& g = j.at("geometry");
    TableDocument doc;
    doc.geometry = Geometry::make(g.at("genus").get<int>(), g.at("d1").get<int>(), g.at("d2").get<int>());
    doc.r_max = j.at("bounds").at("rmax").get<int>();
    doc.e_max = j.at("bounds").at("emax").get<int>();
    doc.table = InvariantTable(doc.geometry, Chamber::Asymptotic);
    for (const json& row : j.at("invariants")) {
      const Charge c(row.at("r").get<int>(), row.at("e").get<int>(), row.at("v").get<int>());
      doc.table.set(c, parse_rational(row.at("value").get<std::string>()));
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed invariant table: ") + e.what());
  }
}

std::string table_to_csv(const InvariantTable& table) {
  std::ostringstream os;
  os << "r,e,v,value\n";
  for (const auto& [c, a] : table.entries()) {
    os << c.r << "," << c.e << "," << c.v << "," << to_string(a) << "\n";
  }
  return os.str();
}

json series_to_json(const BiSeries& s) {
  json terms = json::array();
  for (const auto& [deg, c] : s.terms()) {
    terms.push_back({{"u", deg.first}, {"q", deg.second}, {"value", to_string(c)}});
  }
  return json{{"caps", {{"u", s.u_max()}, {"q", s.q_max()}}}, {"terms", std::move(terms)}};
}

json walls_to_json(const std::vector<Rational>& walls) {
  json out = json::array();
  for (const Rational& w : walls) out.push_back(to_string(w));
  return out;
}

}  // namespace adhm::cli
