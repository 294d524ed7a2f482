#include "qcrystal/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qcrystal {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(Letter l) {
  auto s = std::to_string(l.value);
  if (l.marked) s += '\'';
  return s;
}

Letter parse_letter(std::string_view text) {
  Letter l;
  if (!text.empty() && (text.back() == '\'' || text.back() == '*')) {
    l.marked = true;
    text.remove_suffix(1);
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), l.value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || l.value < 1)
    throw std::invalid_argument("bad letter '" + std::string(text) + "'");
  return l;
}

// ---------------------------------------------------------------------------
// Shapes

namespace {

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty())
      throw std::invalid_argument("bad shape '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts[k]);
  }
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0)
      throw std::invalid_argument("partition parts must be positive: " + join_parts(parts_));
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition must be weakly decreasing: " + join_parts(parts_));
  }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row_length(int row) const {
  return row >= 1 && row <= length() ? parts_[row - 1] : 0;
}

bool Partition::contains(const Cell& c) const {
  return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return Partition{};
  for (int c = 1; c <= parts_.front(); ++c) {
    int h = 0;
    while (h < length() && parts_[h] >= c) ++h;
    conj.push_back(h);
  }
  return Partition(std::move(conj));
}

bool Partition::is_self_conjugate() const { return conjugate() == *this; }

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back({r, c});
  return out;
}

std::string Partition::to_string() const { return join_parts(parts_); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0)
      throw std::invalid_argument("partition parts must be positive: " + join_parts(parts_));
    if (k > 0 && parts_[k] >= parts_[k - 1])
      throw std::invalid_argument("strict partition must be strictly decreasing: " +
                                  join_parts(parts_));
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  return StrictPartition(parse_parts(text));
}

int StrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int StrictPartition::row_length(int row) const {
  return row >= 1 && row <= length() ? parts_[row - 1] : 0;
}

bool StrictPartition::contains(const Cell& c) const {
  return c.row >= 1 && c.row <= length() && c.col >= c.row && c.col <= last_col(c.row);
}

std::vector<Cell> StrictPartition::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= length(); ++r)
    for (int c = first_col(r); c <= last_col(r); ++c) out.push_back({r, c});
  return out;
}

std::string StrictPartition::to_string() const { return join_parts(parts_); }

namespace {

void partitions_rec(int remaining, int max_part, bool strict, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, strict ? p - 1 : p, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  partitions_rec(k, k, false, cur, raw);
  std::vector<Partition> out;
  for (auto& p : raw) out.emplace_back(std::move(p));
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int k) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  partitions_rec(k, k, true, cur, raw);
  std::vector<StrictPartition> out;
  for (auto& p : raw) out.emplace_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Errors

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::ShapeMismatch: return "shape-mismatch";
    case Violation::NonPositive: return "non-positive-entry";
    case Violation::RowOrder: return "row-order";
    case Violation::ColumnOrder: return "column-order";
    case Violation::ColumnRepeat: return "column-repeat";
    case Violation::RowMarkedRepeat: return "row-marked-repeat";
    case Violation::DiagonalMark: return "diagonal-mark";
    case Violation::MarkedInYoung: return "marked-in-young";
  }
  return "unknown";
}

InvalidTableau::InvalidTableau(Violation kind, Cell first, std::optional<Cell> second,
                               const std::string& what)
    : std::invalid_argument(what), kind_(kind), first_(first), second_(second) {}

namespace {

[[noreturn]] void fail(Violation kind, Cell a, std::optional<Cell> b, const std::string& detail) {
  std::string msg = std::string(to_string(kind)) + " at " + to_string(a);
  if (b) msg += " / " + to_string(*b);
  if (!detail.empty()) msg += ": " + detail;
  throw InvalidTableau(kind, a, b, msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Weight / Word

int Weight::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::optional<Partition> Weight::as_partition() const {
  std::vector<int> parts = counts;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) return std::nullopt;
    if (k > 0 && parts[k] > parts[k - 1]) return std::nullopt;
  }
  return Partition(std::move(parts));
}

std::string to_string(const Weight& w) { return "(" + join_parts(w.counts) + ")"; }

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) s += ' ';
    s += to_string(w.letters[k]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Young tableaux

int YoungTableau::at(const Cell& c) const {
  if (!contains(c)) throw std::out_of_range("cell " + to_string(c) + " not in shape");
  return rows_[c.row - 1][c.col - 1];
}

int YoungTableau::max_value() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

YoungTableau YoungTableau::with_entry(const Cell& c, int value) const {
  if (!contains(c)) throw std::out_of_range("cell " + to_string(c) + " not in shape");
  YoungTableau t = *this;
  t.rows_[c.row - 1][c.col - 1] = value;
  return t;
}

std::string YoungTableau::id() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    s += join_parts(rows_[r]);
  }
  return s;
}

namespace {

std::string render_grid(const std::vector<std::vector<std::string>>& rows,
                        const std::vector<int>& first_col) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (const auto& s : row) width = std::max(width, s.size());
  std::string out;
  for (std::size_t r = rows.size(); r-- > 0;) {
    std::string line(static_cast<std::size_t>(first_col[r] - 1) * (width + 1), ' ');
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (k) line += ' ';
      line += std::string(width - rows[r][k].size(), ' ') + rows[r][k];
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace

std::string YoungTableau::render() const {
  std::vector<std::vector<std::string>> cells;
  std::vector<int> first;
  for (const auto& row : rows_) {
    auto& out = cells.emplace_back();
    for (int v : row) out.push_back(std::to_string(v));
    first.push_back(1);
  }
  return render_grid(cells, first);
}

YoungTableau make_young_unchecked(Partition shape, std::vector<std::vector<int>> rows) {
  YoungTableau t;
  t.shape_ = std::move(shape);
  t.rows_ = std::move(rows);
  return t;
}

YoungTableau validate_young(const Partition& shape, std::vector<std::vector<int>> rows) {
  if (static_cast<int>(rows.size()) != shape.length())
    fail(Violation::ShapeMismatch, {static_cast<int>(rows.size()), 0}, std::nullopt,
         "expected " + std::to_string(shape.length()) + " rows");
  for (int r = 1; r <= shape.length(); ++r) {
    const auto& row = rows[r - 1];
    if (static_cast<int>(row.size()) != shape.row_length(r))
      fail(Violation::ShapeMismatch, {r, static_cast<int>(row.size())}, std::nullopt,
           "row length differs from shape");
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      int v = row[c - 1];
      if (v <= 0) fail(Violation::NonPositive, {r, c}, std::nullopt, "");
      if (c > 1 && row[c - 2] > v)
        fail(Violation::RowOrder, {r, c - 1}, Cell{r, c}, "row must weakly increase");
      if (r > 1) {
        int below = rows[r - 2][c - 1];
        if (below > v)
          fail(Violation::ColumnOrder, {r - 1, c}, Cell{r, c}, "column must increase");
        if (below == v)
          fail(Violation::ColumnRepeat, {r - 1, c}, Cell{r, c},
               "column " + std::to_string(c) + " repeats entry " + std::to_string(v));
      }
    }
  }
  return make_young_unchecked(shape, std::move(rows));
}

YoungTableau validate_young(const Partition& shape, const std::map<Cell, int>& entries) {
  std::vector<std::vector<int>> rows(shape.length());
  std::size_t used = 0;
  for (int r = 1; r <= shape.length(); ++r) {
    for (int c = 1; c <= shape.row_length(r); ++c) {
      auto it = entries.find({r, c});
      if (it == entries.end()) fail(Violation::ShapeMismatch, {r, c}, std::nullopt, "missing entry");
      rows[r - 1].push_back(it->second);
      ++used;
    }
  }
  if (used != entries.size()) {
    for (const auto& [cell, v] : entries)
      if (!shape.contains(cell))
        fail(Violation::ShapeMismatch, cell, std::nullopt, "cell outside shape");
  }
  return validate_young(shape, std::move(rows));
}

// ---------------------------------------------------------------------------
// Shifted tableaux

Letter ShiftedTableau::at(const Cell& c) const {
  if (!contains(c)) throw std::out_of_range("cell " + to_string(c) + " not in shape");
  return rows_[c.row - 1][c.col - c.row];
}

std::optional<Letter> ShiftedTableau::get(const Cell& c) const {
  if (!contains(c)) return std::nullopt;
  return rows_[c.row - 1][c.col - c.row];
}

int ShiftedTableau::max_value() const {
  int m = 0;
  for (const auto& row : rows_)
    for (Letter l : row) m = std::max(m, l.value);
  return m;
}

ShiftedTableau ShiftedTableau::with_entry(const Cell& c, Letter value) const {
  if (!contains(c)) throw std::out_of_range("cell " + to_string(c) + " not in shape");
  ShiftedTableau t = *this;
  t.rows_[c.row - 1][c.col - c.row] = value;
  return t;
}

std::string ShiftedTableau::id() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    for (std::size_t k = 0; k < rows_[r].size(); ++k) {
      if (k) s += ',';
      s += to_string(rows_[r][k]);
    }
  }
  return s;
}

std::string ShiftedTableau::render() const {
  std::vector<std::vector<std::string>> cells;
  std::vector<int> first;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& out = cells.emplace_back();
    for (Letter l : rows_[r]) out.push_back(to_string(l));
    first.push_back(static_cast<int>(r) + 1);
  }
  return render_grid(cells, first);
}

ShiftedTableau make_shifted_unchecked(StrictPartition shape,
                                      std::vector<std::vector<Letter>> rows) {
  ShiftedTableau t;
  t.shape_ = std::move(shape);
  t.rows_ = std::move(rows);
  return t;
}

ShiftedTableau validate_shifted(const StrictPartition& shape,
                                std::vector<std::vector<Letter>> rows) {
  if (static_cast<int>(rows.size()) != shape.length())
    fail(Violation::ShapeMismatch, {static_cast<int>(rows.size()), 0}, std::nullopt,
         "expected " + std::to_string(shape.length()) + " rows");
  for (int r = 1; r <= shape.length(); ++r) {
    if (static_cast<int>(rows[r - 1].size()) != shape.row_length(r))
      fail(Violation::ShapeMismatch, {r, static_cast<int>(rows[r - 1].size())}, std::nullopt,
           "row length differs from shape");
  }
  auto at = [&](Cell c) { return rows[c.row - 1][c.col - c.row]; };
  // Rows and columns are weakly increasing, so repeated letters are adjacent
  // and the multiplicity rules reduce to neighbour checks.
  for (const Cell cell : shape.cells()) {
    Letter v = at(cell);
    if (v.value <= 0) fail(Violation::NonPositive, cell, std::nullopt, "");
    if (cell.row == cell.col && v.marked)
      fail(Violation::DiagonalMark, cell, std::nullopt, "marked letter on the main diagonal");
    if (Cell left = cell.west(); shape.contains(left)) {
      Letter u = at(left);
      if (u > v) fail(Violation::RowOrder, left, cell, "row must weakly increase");
      if (u == v && v.marked)
        fail(Violation::RowMarkedRepeat, left, cell, "row repeats " + to_string(v));
    }
    if (Cell below = cell.south(); shape.contains(below)) {
      Letter u = at(below);
      if (u > v) fail(Violation::ColumnOrder, below, cell, "column must weakly increase");
      if (u == v && !v.marked)
        fail(Violation::ColumnRepeat, below, cell, "column repeats " + to_string(v));
    }
  }
  return make_shifted_unchecked(shape, std::move(rows));
}

ShiftedTableau validate_shifted(const StrictPartition& shape,
                                const std::map<Cell, Letter>& entries) {
  std::vector<std::vector<Letter>> rows(shape.length());
  std::size_t used = 0;
  for (const Cell cell : shape.cells()) {
    auto it = entries.find(cell);
    if (it == entries.end()) fail(Violation::ShapeMismatch, cell, std::nullopt, "missing entry");
    rows[cell.row - 1].push_back(it->second);
    ++used;
  }
  if (used != entries.size()) {
    for (const auto& [cell, v] : entries)
      if (!shape.contains(cell))
        fail(Violation::ShapeMismatch, cell, std::nullopt, "cell outside shape");
  }
  return validate_shifted(shape, std::move(rows));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

template <class Entry>
std::vector<int> reading_key(const std::vector<std::vector<Entry>>& rows) {
  std::vector<int> key;
  for (std::size_t r = rows.size(); r-- > 0;) {
    for (const auto& e : rows[r]) {
      if constexpr (std::is_same_v<Entry, Letter>)
        key.push_back(e.rank());
      else
        key.push_back(e);
    }
  }
  return key;
}

template <class T>
void sort_by_reading_word(std::vector<T>& items) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keys;
  keys.reserve(items.size());
  for (std::size_t k = 0; k < items.size(); ++k) keys.emplace_back(reading_key(items[k].rows()), k);
  std::sort(keys.begin(), keys.end());
  std::vector<T> sorted;
  sorted.reserve(items.size());
  for (const auto& kv : keys) sorted.push_back(std::move(items[kv.second]));
  items = std::move(sorted);
}

void fill_young(const Partition& shape, int n, const std::vector<Cell>& order, std::size_t pos,
                std::vector<std::vector<int>>& rows, std::vector<YoungTableau>& out) {
  if (pos == order.size()) {
    out.push_back(make_young_unchecked(shape, rows));
    return;
  }
  const Cell cell = order[pos];
  int lo = 1;
  if (cell.col > 1) lo = std::max(lo, rows[cell.row - 1][cell.col - 2]);
  if (cell.row > 1) lo = std::max(lo, rows[cell.row - 2][cell.col - 1] + 1);
  // Column c of a tableau with entries <= n needs room for the cells above.
  int hi = n - (shape.conjugate().parts()[cell.col - 1] - cell.row);
  for (int v = lo; v <= hi; ++v) {
    rows[cell.row - 1][cell.col - 1] = v;
    fill_young(shape, n, order, pos + 1, rows, out);
  }
}

void fill_shifted(const StrictPartition& shape, int n, const std::vector<Cell>& order,
                  std::size_t pos, std::vector<std::vector<Letter>>& rows,
                  std::vector<ShiftedTableau>& out) {
  if (pos == order.size()) {
    out.push_back(make_shifted_unchecked(shape, rows));
    return;
  }
  const Cell cell = order[pos];
  auto at = [&](Cell c) { return rows[c.row - 1][c.col - c.row]; };
  for (int v = 1; v <= n; ++v) {
    for (bool m : {true, false}) {
      Letter l{v, m};
      if (m && cell.row == cell.col) continue;
      if (Cell left = cell.west(); shape.contains(left)) {
        Letter u = at(left);
        if (u > l || (u == l && m)) continue;
      }
      if (Cell below = cell.south(); shape.contains(below)) {
        Letter u = at(below);
        if (u > l || (u == l && !m)) continue;
      }
      rows[cell.row - 1][cell.col - cell.row] = l;
      fill_shifted(shape, n, order, pos + 1, rows, out);
    }
  }
}

}  // namespace

std::vector<YoungTableau> enumerate_ssyt(const Partition& shape, int n) {
  if (n < 1) throw std::invalid_argument("alphabet bound n must be positive");
  std::vector<YoungTableau> out;
  if (shape.length() > n) return out;
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(p, 0);
  fill_young(shape, n, shape.cells(), 0, rows, out);
  sort_by_reading_word(out);
  return out;
}

std::vector<ShiftedTableau> enumerate_ssht(const StrictPartition& shape, int n) {
  if (n < 1) throw std::invalid_argument("alphabet bound n must be positive");
  std::vector<ShiftedTableau> out;
  std::vector<std::vector<Letter>> rows;
  for (int p : shape.parts()) rows.emplace_back(p, Letter{});
  fill_shifted(shape, n, shape.cells(), 0, rows, out);
  sort_by_reading_word(out);
  return out;
}

// ---------------------------------------------------------------------------
// Weights and reading words

Weight weight(const YoungTableau& t, int n) {
  Weight w{std::vector<int>(n, 0)};
  for (const auto& row : t.rows())
    for (int v : row) {
      if (v > n)
        throw std::invalid_argument("entry " + std::to_string(v) + " exceeds n=" +
                                    std::to_string(n));
      ++w.counts[v - 1];
    }
  return w;
}

Weight weight(const ShiftedTableau& t, int n) {
  Weight w{std::vector<int>(n, 0)};
  for (const auto& row : t.rows())
    for (Letter l : row) {
      if (l.value > n)
        throw std::invalid_argument("entry " + to_string(l) + " exceeds n=" + std::to_string(n));
      ++w.counts[l.value - 1];
    }
  return w;
}

Word row_word(const YoungTableau& t) {
  Word w;
  const auto& rows = t.rows();
  for (int r = static_cast<int>(rows.size()); r >= 1; --r) {
    for (int c = 1; c <= static_cast<int>(rows[r - 1].size()); ++c) {
      w.letters.push_back(unmarked(rows[r - 1][c - 1]));
      w.origins.push_back({r, c});
    }
  }
  return w;
}

Word hook_word(const ShiftedTableau& t) {
  Word w;
  const auto& shape = t.shape();
  int top = shape.length() == 0 ? 0 : std::max(shape.parts().front(), shape.length());
  for (int i = top; i >= 1; --i) {
    for (int r = 1; r <= shape.length(); ++r) {
      Cell c{r, i};
      if (!shape.contains(c)) continue;
      Letter l = t.at(c);
      if (l.marked) {
        w.letters.push_back(l);
        w.origins.push_back(c);
      }
    }
    if (i <= shape.length()) {
      for (int c = shape.first_col(i); c <= shape.last_col(i); ++c) {
        Letter l = t.at({i, c});
        if (!l.marked) {
          w.letters.push_back(l);
          w.origins.push_back({i, c});
        }
      }
    }
  }
  return w;
}

}  // namespace qcrystal
