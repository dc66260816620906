#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "adhm/pseries.hpp"
#include "adhm/wallcross.hpp"

namespace adhm::cli {

// An invariant table together with the data it was computed from.
struct TableDocument {
  Geometry geometry;
  int r_max = 0;
  int e_max = 0;
  InvariantTable table;
};

// {"bounds": {"emax", "rmax"}, "geometry": {"d1", "d2", "genus"},
//  "invariants": [{"e", "r", "v", "value": "p/q"}, ...]} with keys in
// lexicographic order and invariants in charge order.
nlohmann::json table_to_json(const TableDocument& doc);
// Two-space indented text with a trailing newline; canonical, so parsing and
// re-emitting is byte-identical.
std::string table_to_json_text(const TableDocument& doc);
// Throws std::invalid_argument on malformed documents.
TableDocument table_from_json_text(std::string_view text);

// Header "r,e,v,value", one row per entry in charge order.
std::string table_to_csv(const InvariantTable& table);

// {"caps": {"q", "u"}, "terms": [{"q", "u", "value": "p/q"}, ...]}.
nlohmann::json series_to_json(const BiSeries& s);

// ["p/q", ...]
nlohmann::json walls_to_json(const std::vector<Rational>& walls);

}  // namespace adhm::cli
