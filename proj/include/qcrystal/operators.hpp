#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qcrystal/tableaux.hpp"

namespace qcrystal {

/// Running statistic m_i(w, r) = #i - #(i+1) over the prefix w_1..w_r.
/// Marked and unmarked letters of the same value count alike.
struct MProfile {
  int color = 0;
  std::vector<int> values;     // values[r-1] = m_i(w, r)
  int max = 0;                 // 0 for the empty word
  std::size_t argmax_first = 0;  // 1-based; 0 for the empty word
  int final_value = 0;

  /// Lowering is defined exactly when max > 0.
  bool lowerable() const { return !values.empty() && max > 0; }
};

/// Throws std::invalid_argument when the color is not in 1..n-1 or a letter
/// exceeds n. Pass n = 0 to skip the bound checks.
MProfile m_profile(const Word& w, int color, int n = 0);

std::optional<YoungTableau> f_young(const YoungTableau& t, int color);
std::optional<YoungTableau> e_young(const YoungTableau& t, int color);

/// Sub-case of the shifted lowering rule that fired.
enum class ShiftedRule { OneA, OneB, OneC, TwoA, TwoB, TwoC };
std::string_view to_string(ShiftedRule r);

struct ShiftedStep {
  ShiftedTableau result;
  ShiftedRule rule;
  Cell acted;  // the cell of the leftmost maximising letter
};

std::optional<ShiftedStep> f_shifted_step(const ShiftedTableau& t, int color);
std::optional<ShiftedTableau> f_shifted(const ShiftedTableau& t, int color);

/// Queer lowering f_0: the rightmost unmarked 1 becomes 2' (or 2 on the
/// diagonal); undefined if there is no unmarked 1 or some entry is 2'.
std::optional<ShiftedTableau> f_queer(const ShiftedTableau& t);

}  // namespace qcrystal
