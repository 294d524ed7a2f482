#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcrystal/tableaux.hpp"

namespace qcrystal {

/// Unmarked filling of some of the cells of a partition shape. Unfilled cells
/// are holes.
class PartialFilling {
 public:
  PartialFilling() = default;
  /// Throws std::invalid_argument if an entry lies outside the shape or is
  /// not positive.
  PartialFilling(Partition shape, std::map<Cell, int> entries);

  const Partition& shape() const { return shape_; }
  const std::map<Cell, int>& entries() const { return entries_; }
  std::optional<int> get(const Cell& c) const;
  bool is_hole(const Cell& c) const { return shape_.contains(c) && !entries_.count(c); }
  std::vector<Cell> holes() const;

  /// Top row first; holes print as '.'.
  std::string render() const;

  friend bool operator==(const PartialFilling&, const PartialFilling&) = default;

 private:
  Partition shape_;
  std::map<Cell, int> entries_;
};

/// {"kind":"partial","shape":[3,2,1],"rows":[[{"v":1},null,{"v":2}],...],
///  "holes":[[1,2],[3,1]]}
nlohmann::json to_json(const PartialFilling& p);
PartialFilling partial_from_json(const nlohmann::json& j);

/// The shifted diagram of the shape together with its transpose.
Partition symmetric_shape(const StrictPartition& shape);

/// A partial filling of a symmetric shape in which each off-diagonal pair of
/// mirror cells holds exactly one entry and the diagonal is full.
class SymmetricTableau {
 public:
  /// Validates; throws std::invalid_argument (or InvalidTableau) otherwise.
  explicit SymmetricTableau(PartialFilling filling);

  const PartialFilling& filling() const { return filling_; }
  const StrictPartition& base() const { return base_; }

 private:
  PartialFilling filling_;
  StrictPartition base_;
};

/// Moves each marked entry at (r,c) to an unmarked entry at (c,r).
SymmetricTableau to_symmetric(const ShiftedTableau& t);
/// Moves each entry below the diagonal at (r,c) to a marked entry at (c,r).
ShiftedTableau from_symmetric(const SymmetricTableau& s);

/// Slides holes out of the filling until none remain. Each step, in order,
/// is appended to `trace` when given. Throws InternalError if a hole cannot
/// move or the result is not a Young tableau.
YoungTableau rectify(const PartialFilling& p, std::vector<std::string>* trace = nullptr);

YoungTableau rect(const ShiftedTableau& t, std::vector<std::string>* trace = nullptr);

}  // namespace qcrystal
