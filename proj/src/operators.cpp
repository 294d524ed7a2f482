#include "qcrystal/operators.hpp"

#include <algorithm>
#include <string>

namespace qcrystal {

namespace {

YoungTableau revalidate(const YoungTableau& t, std::string_view op) {
  try {
    return validate_young(t.shape(), t.rows());
  } catch (const InvalidTableau& e) {
    throw InternalError(std::string(op) + " produced an invalid tableau (" + e.what() + ")\n" +
                        t.render());
  }
}

}  // namespace

MProfile m_profile(const Word& w, int color, int n) {
  if (color < 1 || (n > 0 && color >= n))
    throw std::invalid_argument("color " + std::to_string(color) + " out of range for n=" +
                                std::to_string(n));
  MProfile p;
  p.color = color;
  p.values.reserve(w.size());
  int running = 0;
  for (std::size_t r = 0; r < w.size(); ++r) {
    const Letter l = w.letters[r];
    if (n > 0 && l.value > n)
      throw std::invalid_argument("letter " + to_string(l) + " exceeds n=" + std::to_string(n));
    if (l.value == color) ++running;
    if (l.value == color + 1) --running;
    p.values.push_back(running);
    if (r == 0 || running > p.max) {
      p.max = running;
      p.argmax_first = r + 1;
    }
  }
  p.final_value = running;
  return p;
}

std::optional<YoungTableau> f_young(const YoungTableau& t, int color) {
  const Word w = row_word(t);
  const MProfile prof = m_profile(w, color);
  if (!prof.lowerable()) return std::nullopt;
  const std::size_t p = prof.argmax_first - 1;
  if (w.letters[p].value != color)
    throw InternalError("f_young: leftmost maximum at letter " + to_string(w.letters[p]) +
                        ", expected " + std::to_string(color));
  return revalidate(t.with_entry(w.origins[p], color + 1), "f_young");
}

std::optional<YoungTableau> e_young(const YoungTableau& t, int color) {
  const Word w = row_word(t);
  const MProfile prof = m_profile(w, color);
  // Include the empty prefix (value 0) when locating the last maximum.
  const int top = std::max(0, prof.values.empty() ? 0 : prof.max);
  if (top <= prof.final_value) return std::nullopt;
  std::size_t q = 0;  // number of letters before the acted-on position
  for (std::size_t r = prof.values.size(); r-- > 0;) {
    if (prof.values[r] == top) {
      q = r + 1;
      break;
    }
  }
  if (w.letters[q].value != color + 1)
    throw InternalError("e_young: expected " + std::to_string(color + 1) + " after last maximum");
  return revalidate(t.with_entry(w.origins[q], color), "e_young");
}

std::string_view to_string(ShiftedRule r) {
  switch (r) {
    case ShiftedRule::OneA: return "1(a)";
    case ShiftedRule::OneB: return "1(b)";
    case ShiftedRule::OneC: return "1(c)";
    case ShiftedRule::TwoA: return "2(a)";
    case ShiftedRule::TwoB: return "2(b)";
    case ShiftedRule::TwoC: return "2(c)";
  }
  return "?";
}

namespace {

ShiftedTableau revalidate(const ShiftedTableau& t, std::string_view op) {
  try {
    return validate_shifted(t.shape(), t.rows());
  } catch (const InvalidTableau& e) {
    throw InternalError(std::string(op) + " produced an invalid tableau (" + e.what() + ")\n" +
                        t.render());
  }
}

bool on_ribbon(const ShiftedTableau& t, Cell c, int value) {
  auto l = t.get(c);
  return l && l->value == value;
}

}  // namespace

std::optional<ShiftedStep> f_shifted_step(const ShiftedTableau& t, int color) {
  const int i = color;
  const Word w = hook_word(t);
  const MProfile prof = m_profile(w, i);
  if (!prof.lowerable()) return std::nullopt;

  const Cell xc = w.origins[prof.argmax_first - 1];
  const Letter x = t.at(xc);
  if (x.value != i)
    throw InternalError("f_shifted: leftmost maximum at " + to_string(x) + " in cell " +
                        to_string(xc) + ", expected value " + std::to_string(i));
  const std::optional<Letter> y = t.get(xc.north());
  const std::optional<Letter> z = t.get(xc.east());
  const Letter next = unmarked(i + 1);
  const Letter next_marked = marked(i + 1);

  ShiftedTableau out = t;
  ShiftedRule rule;
  if (!x.marked) {
    if (z && *z == next_marked) {
      out = out.with_entry(xc, next_marked).with_entry(xc.east(), next);
      rule = ShiftedRule::OneA;
    } else if (!y || *y > next) {
      out = out.with_entry(xc, next);
      rule = ShiftedRule::OneB;
    } else {
      out = out.with_entry(xc, next_marked);
      // Walk the (i+1)-ribbon from y to its northwestern end.
      Cell cur = xc.north();
      while (true) {
        if (on_ribbon(t, cur.north(), i + 1))
          cur = cur.north();
        else if (on_ribbon(t, cur.west(), i + 1))
          cur = cur.west();
        else
          break;
      }
      if (cur == xc) throw InternalError("f_shifted 1(c): ribbon walk returned to x");
      if (t.at(cur).marked) out = out.with_entry(cur, next);
      rule = ShiftedRule::OneC;
    }
  } else {
    if (y && *y == unmarked(i)) {
      out = out.with_entry(xc, unmarked(i)).with_entry(xc.north(), next_marked);
      rule = ShiftedRule::TwoA;
    } else if (!z || *z > next_marked) {
      out = out.with_entry(xc, next_marked);
      rule = ShiftedRule::TwoB;
    } else {
      out = out.with_entry(xc, unmarked(i));
      // Walk the i-ribbon from x towards its southeastern end and mark the
      // first unmarked i whose east neighbour is neither i nor (i+1)'.
      std::optional<Cell> target;
      Cell cur = xc;
      while (true) {
        if (cur != xc) {
          const Letter here = t.at(cur);
          if (!here.marked) {
            auto east = t.get(cur.east());
            if (!east || (*east != unmarked(i) && *east != next_marked)) {
              target = cur;
              break;
            }
          }
        }
        if (on_ribbon(t, cur.east(), i))
          cur = cur.east();
        else if (on_ribbon(t, cur.south(), i))
          cur = cur.south();
        else
          break;
      }
      if (!target)
        throw InternalError("f_shifted 2(c): no target cell on the ribbon from " +
                            to_string(xc) + "\n" + t.render());
      out = out.with_entry(*target, next_marked);
      rule = ShiftedRule::TwoC;
    }
  }
  return ShiftedStep{revalidate(out, "f_shifted"), rule, xc};
}

std::optional<ShiftedTableau> f_shifted(const ShiftedTableau& t, int color) {
  auto step = f_shifted_step(t, color);
  if (!step) return std::nullopt;
  return std::move(step->result);
}

std::optional<ShiftedTableau> f_queer(const ShiftedTableau& t) {
  std::optional<Cell> rightmost;
  for (const auto& cell : t.shape().cells()) {
    const Letter l = t.at(cell);
    if (l == marked(2)) return std::nullopt;
    if (l == unmarked(1) && (!rightmost || cell.col > rightmost->col)) rightmost = cell;
  }
  if (!rightmost) return std::nullopt;
  const bool diagonal = rightmost->row == rightmost->col;
  return revalidate(t.with_entry(*rightmost, diagonal ? unmarked(2) : marked(2)), "f_queer");
}

}  // namespace qcrystal
