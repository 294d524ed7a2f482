#pragma once

#include <variant>

#include <json.hpp>

#include "qcrystal/tableaux.hpp"

namespace qcrystal {

using json = nlohmann::json;

// {"kind":"young"|"shifted", "shape":[3,1],
//  "rows":[[{"v":1},{"v":2,"m":true},{"v":2}],[{"v":2}]]}
// Rows bottom-first; each row left to right from its leftmost column.
json to_json(const YoungTableau& t);
json to_json(const ShiftedTableau& t);

using AnyTableau = std::variant<YoungTableau, ShiftedTableau>;

/// Parses and validates. Throws std::invalid_argument (or InvalidTableau).
AnyTableau tableau_from_json(const json& j);
YoungTableau young_from_json(const json& j);
ShiftedTableau shifted_from_json(const json& j);

}  // namespace qcrystal
