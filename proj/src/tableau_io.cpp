#include "qcrystal/tableau_io.hpp"

#include <string>

namespace qcrystal {

json to_json(const YoungTableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) {
    json r = json::array();
    for (int v : row) r.push_back({{"v", v}});
    rows.push_back(std::move(r));
  }
  return {{"kind", "young"}, {"shape", t.shape().parts()}, {"rows", std::move(rows)}};
}

json to_json(const ShiftedTableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) {
    json r = json::array();
    for (Letter l : row) {
      json cell = {{"v", l.value}};
      if (l.marked) cell["m"] = true;
      r.push_back(std::move(cell));
    }
    rows.push_back(std::move(r));
  }
  return {{"kind", "shifted"}, {"shape", t.shape().parts()}, {"rows", std::move(rows)}};
}

namespace {

Letter letter_from_json(const json& cell) {
  if (!cell.is_object() || !cell.contains("v") || !cell["v"].is_number_integer())
    throw std::invalid_argument("tableau cell must be an object with integer \"v\"");
  return {cell["v"].get<int>(), cell.value("m", false)};
}

std::vector<std::vector<Letter>> rows_from_json(const json& j) {
  if (!j.contains("rows") || !j["rows"].is_array())
    throw std::invalid_argument("tableau JSON needs a \"rows\" array");
  std::vector<std::vector<Letter>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw std::invalid_argument("tableau rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& cell : row) out.push_back(letter_from_json(cell));
  }
  return rows;
}

std::vector<int> shape_from_json(const json& j) {
  if (!j.contains("shape") || !j["shape"].is_array())
    throw std::invalid_argument("tableau JSON needs a \"shape\" array");
  return j["shape"].get<std::vector<int>>();
}

}  // namespace

YoungTableau young_from_json(const json& j) {
  Partition shape(shape_from_json(j));
  std::vector<std::vector<int>> rows;
  int r = 1;
  for (const auto& row : rows_from_json(j)) {
    auto& out = rows.emplace_back();
    int c = 1;
    for (Letter l : row) {
      if (l.marked)
        throw InvalidTableau(Violation::MarkedInYoung, {r, c}, std::nullopt,
                             "marked letter in a Young tableau at " + to_string(Cell{r, c}));
      out.push_back(l.value);
      ++c;
    }
    ++r;
  }
  return validate_young(shape, std::move(rows));
}

ShiftedTableau shifted_from_json(const json& j) {
  return validate_shifted(StrictPartition(shape_from_json(j)), rows_from_json(j));
}

AnyTableau tableau_from_json(const json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "young") return young_from_json(j);
  if (kind == "shifted") return shifted_from_json(j);
  throw std::invalid_argument("tableau \"kind\" must be \"young\" or \"shifted\"");
}

}  // namespace qcrystal
