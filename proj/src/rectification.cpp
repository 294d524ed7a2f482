#include "qcrystal/rectification.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcrystal {

PartialFilling::PartialFilling(Partition shape, std::map<Cell, int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  for (const auto& [c, v] : entries_) {
    if (!shape_.contains(c))
      throw std::invalid_argument("entry at " + to_string(c) + " lies outside the shape");
    if (v <= 0) throw std::invalid_argument("entry at " + to_string(c) + " is not positive");
  }
}

std::optional<int> PartialFilling::get(const Cell& c) const {
  auto it = entries_.find(c);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<Cell> PartialFilling::holes() const {
  std::vector<Cell> out;
  for (const Cell& c : shape_.cells())
    if (!entries_.count(c)) out.push_back(c);
  return out;
}

std::string PartialFilling::render() const {
  std::size_t width = 1;
  for (const auto& [c, v] : entries_) width = std::max(width, std::to_string(v).size());
  std::string out;
  for (int r = shape_.length(); r >= 1; --r) {
    std::string line;
    for (int c = 1; c <= shape_.row_length(r); ++c) {
      auto v = get({r, c});
      std::string s = v ? std::to_string(*v) : ".";
      if (c > 1) line += ' ';
      line += std::string(width - s.size(), ' ') + s;
    }
    out += line + '\n';
  }
  return out;
}

nlohmann::json to_json(const PartialFilling& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 1; r <= p.shape().length(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 1; c <= p.shape().row_length(r); ++c) {
      auto v = p.get({r, c});
      row.push_back(v ? nlohmann::json{{"v", *v}} : nlohmann::json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json holes = nlohmann::json::array();
  for (const Cell& c : p.holes()) holes.push_back({c.row, c.col});
  return {{"kind", "partial"}, {"shape", p.shape().parts()}, {"rows", rows}, {"holes", holes}};
}

PartialFilling partial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
    throw std::invalid_argument("partial filling JSON needs \"shape\" and \"rows\"");
  Partition shape(j["shape"].get<std::vector<int>>());
  const auto& rows = j["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != shape.length())
    throw std::invalid_argument("partial filling rows do not match the shape");
  std::map<Cell, int> entries;
  for (int r = 1; r <= shape.length(); ++r) {
    const auto& row = rows[r - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != shape.row_length(r))
      throw std::invalid_argument("partial filling row " + std::to_string(r) +
                                  " has the wrong length");
    for (int c = 1; c <= shape.row_length(r); ++c) {
      const auto& cell = row[c - 1];
      if (cell.is_null()) continue;
      if (!cell.is_object() || !cell.contains("v") || !cell["v"].is_number_integer())
        throw std::invalid_argument("partial filling cell must be null or {\"v\":int}");
      if (cell.value("m", false))
        throw std::invalid_argument("partial fillings hold unmarked entries only");
      entries[{r, c}] = cell["v"].get<int>();
    }
  }
  PartialFilling p(std::move(shape), std::move(entries));
  if (j.contains("holes")) {
    std::vector<Cell> listed;
    for (const auto& h : j["holes"]) listed.push_back({h.at(0).get<int>(), h.at(1).get<int>()});
    std::sort(listed.begin(), listed.end());
    if (listed != p.holes())
      throw std::invalid_argument("\"holes\" does not match the null cells of \"rows\"");
  }
  return p;
}

Partition symmetric_shape(const StrictPartition& shape) {
  std::map<int, int> width;
  for (const Cell& c : shape.cells()) {
    width[c.row] = std::max(width[c.row], c.col);
    width[c.col] = std::max(width[c.col], c.row);
  }
  std::vector<int> parts;
  for (const auto& [r, w] : width) parts.push_back(w);
  return Partition(parts);
}

namespace {

StrictPartition base_of(const Partition& p) {
  std::vector<int> parts;
  for (int r = 1; r <= p.length() && p.row_length(r) >= r; ++r)
    parts.push_back(p.row_length(r) - r + 1);
  return StrictPartition(parts);
}

}  // namespace

SymmetricTableau::SymmetricTableau(PartialFilling filling) : filling_(std::move(filling)) {
  const Partition& shape = filling_.shape();
  if (!shape.is_self_conjugate())
    throw std::invalid_argument("shape " + shape.to_string() + " is not self-conjugate");
  base_ = base_of(shape);
  for (const Cell& c : shape.cells()) {
    const bool here = filling_.get(c).has_value();
    if (c.row == c.col) {
      if (!here) throw std::invalid_argument("diagonal cell " + to_string(c) + " is empty");
      continue;
    }
    const bool mirror = filling_.get({c.col, c.row}).has_value();
    if (here == mirror)
      throw std::invalid_argument("cells " + to_string(c) + " and " +
                                  to_string(Cell{c.col, c.row}) +
                                  (here ? " are both filled" : " are both empty"));
  }
  from_symmetric(*this);
}

SymmetricTableau to_symmetric(const ShiftedTableau& t) {
  std::map<Cell, int> entries;
  for (const Cell& c : t.shape().cells()) {
    const Letter l = t.at(c);
    entries[l.marked ? Cell{c.col, c.row} : c] = l.value;
  }
  return SymmetricTableau(PartialFilling(symmetric_shape(t.shape()), std::move(entries)));
}

ShiftedTableau from_symmetric(const SymmetricTableau& s) {
  std::map<Cell, Letter> folded;
  for (const auto& [c, v] : s.filling().entries()) {
    if (c.row > c.col)
      folded[{c.col, c.row}] = marked(v);
    else
      folded[c] = unmarked(v);
  }
  return validate_shifted(s.base(), folded);
}

namespace {

class Rectifier {
 public:
  Rectifier(const PartialFilling& p, std::vector<std::string>* trace) : trace_(trace) {
    for (int r = 1; r <= p.shape().length(); ++r) {
      auto& row = grid_.emplace_back();
      for (int c = 1; c <= p.shape().row_length(r); ++c) row.push_back(p.get({r, c}));
    }
  }

  YoungTableau run() {
    check_diagonal();
    while (auto hole = next_hole()) {
      slide(*hole);
      check_diagonal();
    }
    std::vector<std::vector<int>> rows;
    std::vector<int> parts;
    for (const auto& row : grid_) {
      auto& out = rows.emplace_back();
      for (const auto& v : row) out.push_back(*v);
      parts.push_back(static_cast<int>(row.size()));
    }
    try {
      return validate_young(Partition(parts), std::move(rows));
    } catch (const std::invalid_argument& e) {
      throw InternalError(std::string("rectification produced an invalid tableau: ") + e.what() +
                          "\n" + dump());
    }
  }

 private:
  bool in_shape(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.row <= static_cast<int>(grid_.size()) &&
           c.col <= static_cast<int>(grid_[c.row - 1].size());
  }
  std::optional<int>& at(Cell c) { return grid_[c.row - 1][c.col - 1]; }

  std::optional<Cell> next_hole() const {
    int d = -1;
    for (int r = 1; r <= static_cast<int>(grid_.size()); ++r)
      for (int c = 1; c <= static_cast<int>(grid_[r - 1].size()); ++c)
        if (!grid_[r - 1][c - 1]) d = std::max(d, r + c);
    if (d < 0) return std::nullopt;
    std::optional<Cell> below, above;
    for (int r = 1; r < d; ++r) {
      const Cell c{r, d - r};
      if (!in_shape(c) || grid_[r - 1][c.col - 1]) continue;
      if (r > c.col) {
        if (!below || r > below->row) below = c;
      } else if (r < c.col) {
        if (!above || r < above->row) above = c;
      } else {
        throw InternalError("hole on the diagonal at " + to_string(c) + "\n" + dump());
      }
    }
    return below ? below : above;
  }

  void slide(Cell cur) {
    const Cell start = cur;
    std::string moves;
    while (true) {
      const Cell up = cur.north();
      const Cell right = cur.east();
      const bool has_up = in_shape(up);
      const bool has_right = in_shape(right);
      if (!has_up && !has_right) {
        grid_[cur.row - 1].pop_back();
        if (grid_[cur.row - 1].empty()) grid_.pop_back();
        moves += "delete " + to_string(cur);
        break;
      }
      if ((has_up && !at(up)) || (has_right && !at(right)))
        throw InternalError("hole at " + to_string(cur) + " is next to another hole\n" + dump());
      if (has_up && (!has_right || *at(right) >= *at(up))) {
        at(cur) = at(up);
        at(up).reset();
        moves += std::to_string(*at(cur)) + " down from " + to_string(up) + "; ";
        cur = up;
      } else if (has_right && (!has_up || *at(up) > *at(right))) {
        at(cur) = at(right);
        at(right).reset();
        moves += std::to_string(*at(cur)) + " left from " + to_string(right) + "; ";
        cur = right;
      } else {
        throw InternalError("no slide rule applies to the hole at " + to_string(cur) + "\n" +
                            dump());
      }
    }
    if (trace_) trace_->push_back("hole " + to_string(start) + ": " + moves);
  }

  void check_diagonal() const {
    for (int r = 1; r <= static_cast<int>(grid_.size()); ++r)
      if (r <= static_cast<int>(grid_[r - 1].size()) && !grid_[r - 1][r - 1])
        throw InternalError("diagonal cell " + to_string(Cell{r, r}) + " is empty\n" + dump());
  }

  std::string dump() const {
    std::string out;
    for (std::size_t r = grid_.size(); r-- > 0;) {
      for (std::size_t c = 0; c < grid_[r].size(); ++c) {
        if (c) out += ' ';
        out += grid_[r][c] ? std::to_string(*grid_[r][c]) : ".";
      }
      out += '\n';
    }
    return out;
  }

  std::vector<std::vector<std::optional<int>>> grid_;
  std::vector<std::string>* trace_;
};

}  // namespace

YoungTableau rectify(const PartialFilling& p, std::vector<std::string>* trace) {
  return Rectifier(p, trace).run();
}

YoungTableau rect(const ShiftedTableau& t, std::vector<std::string>* trace) {
  return rectify(to_symmetric(t).filling(), trace);
}

}  // namespace qcrystal
