#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcrystal {

// Rows are indexed from the bottom (row 1 is the lowest row), columns from the
// left. North of (r,c) is (r+1,c), east is (r,c+1).
struct Cell {
  int row = 0;
  int col = 0;

  Cell north() const { return {row + 1, col}; }
  Cell south() const { return {row - 1, col}; }
  Cell east() const { return {row, col + 1}; }
  Cell west() const { return {row, col - 1}; }

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

/// A possibly marked letter. Ordered 1' < 1 < 2' < 2 < ...
struct Letter {
  int value = 0;
  bool marked = false;

  constexpr int rank() const { return 2 * value - (marked ? 1 : 0); }

  friend constexpr bool operator==(Letter a, Letter b) {
    return a.value == b.value && a.marked == b.marked;
  }
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.rank() <=> b.rank();
  }
};

constexpr Letter unmarked(int v) { return {v, false}; }
constexpr Letter marked(int v) { return {v, true}; }

/// Marked letters render with a trailing apostrophe: 2'.
std::string to_string(Letter l);
Letter parse_letter(std::string_view text);

// ---------------------------------------------------------------------------
// Shapes

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Comma separated parts, "3,1". The empty string is the empty shape.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// Length of row `row` (1-based); zero past the last row.
  int row_length(int row) const;
  bool contains(const Cell& c) const;
  bool is_self_conjugate() const;
  Partition conjugate() const;
  std::vector<Cell> cells() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing sequence of positive integers. Row r of the shifted
/// diagram occupies columns r .. r + parts[r-1] - 1.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  static StrictPartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int row_length(int row) const;
  int first_col(int row) const { return row; }
  int last_col(int row) const { return row + row_length(row) - 1; }
  bool contains(const Cell& c) const;
  std::vector<Cell> cells() const;
  Partition as_partition() const { return Partition(parts_); }
  std::string to_string() const;

  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of k, in reverse lexicographic order ((k) first).
std::vector<Partition> partitions_of(int k);
/// All strict partitions of k, in reverse lexicographic order.
std::vector<StrictPartition> strict_partitions_of(int k);

// ---------------------------------------------------------------------------
// Validation errors

enum class Violation {
  ShapeMismatch,
  NonPositive,
  RowOrder,
  ColumnOrder,
  ColumnRepeat,     // two equal unmarked letters in one column
  RowMarkedRepeat,  // two equal marked letters in one row
  DiagonalMark,
  MarkedInYoung,
};

std::string_view to_string(Violation v);

class InvalidTableau : public std::invalid_argument {
 public:
  InvalidTableau(Violation kind, Cell first, std::optional<Cell> second,
                 const std::string& what);

  Violation kind() const { return kind_; }
  Cell first() const { return first_; }
  std::optional<Cell> second() const { return second_; }

 private:
  Violation kind_;
  Cell first_;
  std::optional<Cell> second_;
};

/// Raised when an operation detects a state that valid inputs cannot reach.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A checked mathematical identity did not hold.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Tableaux

struct Weight {
  std::vector<int> counts;

  int total() const;
  /// The weight as a partition after dropping trailing zeros, if it is one.
  std::optional<Partition> as_partition() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

struct Word {
  std::vector<Letter> letters;
  std::vector<Cell> origins;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

std::string to_string(const Word& w);

class YoungTableau {
 public:
  YoungTableau() = default;

  const Partition& shape() const { return shape_; }
  /// Rows bottom-first, each left to right from column 1.
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool contains(const Cell& c) const { return shape_.contains(c); }
  int at(const Cell& c) const;
  int max_value() const;

  /// Copy with one entry replaced. The result is not validated.
  YoungTableau with_entry(const Cell& c, int value) const;

  /// Canonical one-line form, rows bottom-first separated by '/': "1,1,1/2".
  std::string id() const;
  /// Multi-line rendering with the top row first.
  std::string render() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  friend YoungTableau validate_young(const Partition&, std::vector<std::vector<int>>);
  friend YoungTableau make_young_unchecked(Partition, std::vector<std::vector<int>>);

  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

class ShiftedTableau {
 public:
  ShiftedTableau() = default;

  const StrictPartition& shape() const { return shape_; }
  /// Rows bottom-first; row r lists columns r, r+1, ... left to right.
  const std::vector<std::vector<Letter>>& rows() const { return rows_; }

  bool contains(const Cell& c) const { return shape_.contains(c); }
  Letter at(const Cell& c) const;
  std::optional<Letter> get(const Cell& c) const;
  int max_value() const;

  ShiftedTableau with_entry(const Cell& c, Letter value) const;

  std::string id() const;
  std::string render() const;

  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;

 private:
  friend ShiftedTableau validate_shifted(const StrictPartition&,
                                         std::vector<std::vector<Letter>>);
  friend ShiftedTableau make_shifted_unchecked(StrictPartition,
                                               std::vector<std::vector<Letter>>);

  StrictPartition shape_;
  std::vector<std::vector<Letter>> rows_;
};

/// Checks row-weak / column-strict fillings. Rows are given bottom-first.
/// Throws InvalidTableau naming the first violation found.
YoungTableau validate_young(const Partition& shape, std::vector<std::vector<int>> rows);
YoungTableau validate_young(const Partition& shape, const std::map<Cell, int>& entries);

ShiftedTableau validate_shifted(const StrictPartition& shape,
                                std::vector<std::vector<Letter>> rows);
ShiftedTableau validate_shifted(const StrictPartition& shape,
                                const std::map<Cell, Letter>& entries);

/// Builds without checking; only for callers that have already established
/// validity (enumeration, operators that re-validate).
YoungTableau make_young_unchecked(Partition shape, std::vector<std::vector<int>> rows);
ShiftedTableau make_shifted_unchecked(StrictPartition shape,
                                      std::vector<std::vector<Letter>> rows);

/// Every SSYT of `shape` with entries in 1..n, sorted lexicographically by
/// row reading word.
std::vector<YoungTableau> enumerate_ssyt(const Partition& shape, int n);

/// Every semistandard shifted tableau of `shape` over 1' < 1 < ... < n' < n,
/// sorted lexicographically by row reading word (letter order).
std::vector<ShiftedTableau> enumerate_ssht(const StrictPartition& shape, int n);

/// Coordinate i counts entries of value i, marked or not.
Weight weight(const YoungTableau& t, int n);
Weight weight(const ShiftedTableau& t, int n);

/// Rows from the top down, each left to right.
Word row_word(const YoungTableau& t);

/// For i from the largest column down to 1: marked entries of column i from
/// bottom to top, then unmarked entries of row i from left to right.
Word hook_word(const ShiftedTableau& t);

}  // namespace qcrystal
