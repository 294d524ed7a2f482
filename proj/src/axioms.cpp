#include "qcrystal/axioms.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qcrystal {

std::set<std::string> AxiomReport::failed_axioms() const {
  std::set<std::string> out;
  for (const auto& v : violations) out.insert(v.axiom);
  return out;
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations)
    vs.push_back({{"axiom", v.id()},
                  {"vertices", v.vertices},
                  {"colors", v.colors},
                  {"detail", v.detail}});
  return {{"passed", passed()}, {"violations", std::move(vs)}};
}

std::string AxiomReport::to_text() const {
  if (passed()) return "all axioms hold\n";
  std::ostringstream os;
  os << violations.size() << " violation(s)\n";
  for (const auto& v : violations) {
    os << "  " << v.id() << " colors [";
    for (std::size_t k = 0; k < v.colors.size(); ++k) os << (k ? "," : "") << v.colors[k];
    os << "] at";
    for (const auto& id : v.vertices) os << " {" << id << "}";
    os << ": " << v.detail << '\n';
  }
  return os.str();
}

namespace {

class Checker {
 public:
  explicit Checker(const ColoredDigraph& g) : g_(g) {}

  // Structural axioms for one set of colors: degree bounds and acyclicity.
  // Returns false if any failed.
  bool structure(const std::vector<int>& colors, const std::string& degree_axiom,
                 const std::string& acyclic_axiom, AxiomReport& report) const {
    bool ok = true;
    for (int c : colors) {
      for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
        if (g_.out(v, c).size() > 1 || g_.in(v, c).size() > 1) {
          add(report, degree_axiom, "", {v}, {c},
              "vertex has " + std::to_string(g_.in(v, c).size()) + " incoming and " +
                  std::to_string(g_.out(v, c).size()) + " outgoing edges of this color");
          ok = false;
        }
      }
      // Kahn peeling: whatever keeps an incoming edge lies on or after a cycle.
      std::vector<std::size_t> indeg(g_.vertex_count());
      std::vector<std::size_t> stack;
      for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
        indeg[v] = g_.in(v, c).size();
        if (indeg[v] == 0) stack.push_back(v);
      }
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : g_.out(v, c))
          if (--indeg[w] == 0) stack.push_back(w);
      }
      std::vector<std::size_t> stuck;
      for (std::size_t v = 0; v < g_.vertex_count(); ++v)
        if (indeg[v] > 0) stuck.push_back(v);
      if (!stuck.empty()) {
        add(report, acyclic_axiom, "", stuck, {c}, "monochromatic directed cycle");
        ok = false;
      }
    }
    return ok;
  }

  // Colors not listed keep all-zero string statistics.
  void compute_strings(const std::vector<int>& colors) {
    const auto n = g_.vertex_count();
    delta_.assign(std::max(0, g_.degree()), std::vector<int>(n, 0));
    eps_.assign(std::max(0, g_.degree()), std::vector<int>(n, 0));
    for (int c : colors)
      for (std::size_t v = 0; v < n; ++v) {
        const auto s = string_stats(g_, v, c);
        delta_[c][v] = s.delta;
        eps_[c][v] = s.epsilon;
      }
  }

  // A3-A6 over `colors`.
  void regular_local(const std::vector<int>& colors, AxiomReport& report) const {
    const auto n = g_.vertex_count();
    for (std::size_t x = 0; x < n; ++x) {
      for (int i : colors) {
        const auto ex = E(i, x);
        if (!ex) continue;
        for (int j : colors) {
          const int dd = delta(j, x) - delta(j, *ex);
          const int de = eps(j, *ex) - eps(j, x);
          const int expect = j == i ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
          if (dd + de != expect)
            add(report, "A3", "", {x, *ex}, {i, j},
                "Δδ + Δε = " + std::to_string(dd + de) + ", expected " + std::to_string(expect));
          if (j != i && (dd > 0 || de > 0))
            add(report, "A4", "", {x, *ex}, {i, j},
                "Δδ = " + std::to_string(dd) + ", Δε = " + std::to_string(de) +
                    ", both must be <= 0");
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (int i : colors) {
        for (int j : colors) {
          if (i == j) continue;
          a5_raising(x, i, j, report);
          a5_lowering(x, i, j, report);
          if (i < j) {
            a6_raising(x, i, j, report);
            a6_lowering(x, i, j, report);
          }
        }
      }
    }
  }

  bool queer_structure(AxiomReport& report) const {
    bool ok = true;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (g_.out(v, 0).size() > 1 || g_.in(v, 0).size() > 1) {
        add(report, "B2", "", {v}, {0},
            "vertex has " + std::to_string(g_.in(v, 0).size()) + " incoming and " +
                std::to_string(g_.out(v, 0).size()) + " outgoing 0-edges");
        ok = false;
      }
      if (!g_.out(v, 0).empty() && !g_.in(v, 0).empty()) {
        std::vector<std::size_t> path{g_.in(v, 0).front(), v, g_.out(v, 0).front()};
        add(report, "B1", "path", path, {0}, "0-path of length at least 2");
        ok = false;
      }
    }
    return ok;
  }

  void queer_local(AxiomReport& report) const {
    const auto n = g_.vertex_count();
    const int degree = g_.degree();
    for (std::size_t x = 0; x < n; ++x) {
      if (delta(1, x) + eps(1, x) + eps(2, x) > 1 && delta(0, x) + eps(0, x) != 1)
        add(report, "B1", "string", {x}, {0, 1, 2},
            "δ1+ε1+ε2 = " + std::to_string(delta(1, x) + eps(1, x) + eps(2, x)) +
                " but δ0+ε0 = " + std::to_string(delta(0, x) + eps(0, x)));
    }
    for (std::size_t x = 0; x < n; ++x) {
      const auto ex = E(0, x);
      if (!ex) continue;
      for (int i = 0; i < degree; ++i) {
        const int dd = delta(i, x) - delta(i, *ex);
        const int de = eps(i, *ex) - eps(i, x);
        const int expect = i <= 1 ? 2 : (i == 2 ? -1 : 0);
        if (dd + de != expect)
          add(report, "B3", "", {x, *ex}, {0, i},
              "Δ0δ + Δ0ε = " + std::to_string(dd + de) + ", expected " + std::to_string(expect));
        bool ok = true;
        std::string rule;
        if (i == 1) {
          ok = dd >= 0 && de > 0;
          rule = "Δ0δ1 >= 0 and Δ0ε1 > 0";
        } else if (i == 2) {
          ok = dd <= 0 && de <= 0;
          rule = "Δ0δ2 <= 0 and Δ0ε2 <= 0";
        } else if (i >= 3) {
          ok = dd == 0 && de == 0;
          rule = "Δ0δi = Δ0εi = 0";
        }
        if (!ok)
          add(report, "B4", "", {x, *ex}, {0, i},
              "Δ0δ = " + std::to_string(dd) + ", Δ0ε = " + std::to_string(de) + "; need " + rule);
      }
      // B6
      const int dd1 = delta(1, x) - delta(1, *ex);
      if (dd1 == 1) {
        const auto e1 = E(1, x);
        if (eps(1, x) != 0 || !e1 || *e1 != *ex)
          add(report, "B6", "Δδ1", {x, *ex}, {0, 1},
              "Δ0δ1 = 1 requires ε1 = 0 and E0 x = E1 x");
      }
      const int de2 = eps(2, *ex) - eps(2, x);
      if ((de2 == 0) != (eps(2, x) == 0))
        add(report, "B6", "Δε2", {x, *ex}, {0, 2},
            "Δ0ε2 = " + std::to_string(de2) + " but ε2 = " + std::to_string(eps(2, x)));
    }
    // B5
    for (std::size_t z = 0; z < n; ++z) {
      for (int i = 1; i < degree; ++i) {
        if (i >= 2) {
          const auto x = F(i, z), y = F(0, z);
          if (x && y) {
            const auto a = F(i, *y), b = F(0, *x);
            if (!a || !b || *a != *b)
              add(report, "B5", "i≥2", {z, *x, *y}, {0, i}, "F_i F_0 z != F_0 F_i z");
          }
        }
        if (i != 2) {
          const auto x = E(i, z), y = E(0, z);
          if (x && y && *x != *y) {
            const auto a = E(i, *y), b = E(0, *x);
            if (!a || !b || *a != *b)
              add(report, "B5", "i=1|i≥3", {z, *x, *y}, {0, i}, "E_i E_0 z != E_0 E_i z");
          }
        }
      }
    }
  }

 private:
  std::optional<std::size_t> E(int c, std::optional<std::size_t> v) const {
    if (!v) return std::nullopt;
    return g_.raise(*v, c);
  }
  std::optional<std::size_t> F(int c, std::optional<std::size_t> v) const {
    if (!v) return std::nullopt;
    return g_.lower(*v, c);
  }
  int delta(int c, std::size_t v) const {
    return c < static_cast<int>(delta_.size()) ? delta_[c][v] : 0;
  }
  int eps(int c, std::size_t v) const { return c < static_cast<int>(eps_.size()) ? eps_[c][v] : 0; }

  void a5_raising(std::size_t x, int i, int j, AxiomReport& report) const {
    const auto ei = E(i, x), ej = E(j, x);
    if (!ei || !ej) return;
    if (delta(j, x) - delta(j, *ei) != 0) return;
    const auto y1 = E(i, ej), y2 = E(j, ei);
    if (!y1 || !y2 || *y1 != *y2) {
      add(report, "A5", "E", {x}, {i, j}, "Δiδj = 0 but E_i E_j x != E_j E_i x");
      return;
    }
    // ∇_j ε_i(y) = ε_i(y) - ε_i(F_j y), and F_j y = E_i x.
    if (eps(i, *y1) - eps(i, *ei) != 0)
      add(report, "A5", "E", {x, *y1}, {i, j}, "Δiδj = 0 but ∇jεi(y) != 0");
  }

  void a5_lowering(std::size_t x, int i, int j, AxiomReport& report) const {
    const auto fi = F(i, x), fj = F(j, x);
    if (!fi || !fj) return;
    if (eps(j, x) - eps(j, *fi) != 0) return;
    const auto y1 = F(i, fj), y2 = F(j, fi);
    if (!y1 || !y2 || *y1 != *y2) {
      add(report, "A5", "F", {x}, {i, j}, "∇iεj = 0 but F_i F_j x != F_j F_i x");
      return;
    }
    // Δ_j δ_i(y) = δ_i(y) - δ_i(E_j y), and E_j y = F_i x.
    if (delta(i, *y1) - delta(i, *fi) != 0)
      add(report, "A5", "F", {x, *y1}, {i, j}, "∇iεj = 0 but Δjδi(y) != 0");
  }

  void a6_raising(std::size_t x, int i, int j, AxiomReport& report) const {
    const auto ei = E(i, x), ej = E(j, x);
    if (!ei || !ej) return;
    if (delta(j, x) - delta(j, *ei) != -1 || delta(i, x) - delta(i, *ej) != -1) return;
    const auto y1 = E(i, E(j, E(j, ei)));
    const auto y2 = E(j, E(i, E(i, ej)));
    if (!y1 || !y2 || *y1 != *y2) {
      add(report, "A6", "E", {x}, {i, j}, "Δiδj = Δjδi = -1 but E_i E_j² E_i x != E_j E_i² E_j x");
      return;
    }
    const auto fi = F(i, y1), fj = F(j, y1);
    const int nij = eps(j, *y1) - eps(j, *fi);
    const int nji = eps(i, *y1) - eps(i, *fj);
    if (nij != -1 || nji != -1)
      add(report, "A6", "E", {x, *y1}, {i, j},
          "∇iεj(y) = " + std::to_string(nij) + ", ∇jεi(y) = " + std::to_string(nji) +
              ", expected -1");
  }

  void a6_lowering(std::size_t x, int i, int j, AxiomReport& report) const {
    const auto fi = F(i, x), fj = F(j, x);
    if (!fi || !fj) return;
    if (eps(j, x) - eps(j, *fi) != -1 || eps(i, x) - eps(i, *fj) != -1) return;
    const auto y1 = F(i, F(j, F(j, fi)));
    const auto y2 = F(j, F(i, F(i, fj)));
    if (!y1 || !y2 || *y1 != *y2) {
      add(report, "A6", "F", {x}, {i, j}, "∇iεj = ∇jεi = -1 but F_i F_j² F_i x != F_j F_i² F_j x");
      return;
    }
    const auto ei = E(i, y1), ej = E(j, y1);
    const int dij = delta(j, *y1) - delta(j, *ei);
    const int dji = delta(i, *y1) - delta(i, *ej);
    if (dij != -1 || dji != -1)
      add(report, "A6", "F", {x, *y1}, {i, j},
          "Δiδj(y) = " + std::to_string(dij) + ", Δjδi(y) = " + std::to_string(dji) +
              ", expected -1");
  }

  void add(AxiomReport& report, std::string axiom, std::string clause,
           const std::vector<std::size_t>& vs, std::vector<int> colors, std::string detail) const {
    AxiomViolation v;
    v.axiom = std::move(axiom);
    v.clause = std::move(clause);
    for (auto idx : vs) v.vertices.push_back(g_.vertex(idx).id);
    v.colors = std::move(colors);
    v.detail = std::move(detail);
    report.violations.push_back(std::move(v));
  }

  const ColoredDigraph& g_;
  std::vector<std::vector<int>> delta_;
  std::vector<std::vector<int>> eps_;
};

std::vector<int> positive_colors(const ColoredDigraph& g) {
  std::vector<int> colors;
  for (int c = 1; c < g.degree(); ++c) colors.push_back(c);
  return colors;
}

}  // namespace

AxiomReport check_regular(const ColoredDigraph& g) {
  AxiomReport report;
  Checker checker(g);
  const auto colors = positive_colors(g);
  if (!checker.structure(colors, "A2", "A1", report)) return report;
  checker.compute_strings(colors);
  checker.regular_local(colors, report);
  return report;
}

AxiomReport check_queer_regular(const ColoredDigraph& g) {
  AxiomReport report;
  for (auto v : check_regular(g).violations) {
    v.clause = v.id();
    v.axiom = "B0";
    report.violations.push_back(std::move(v));
  }
  Checker checker(g);
  AxiomReport scratch;
  auto colors = positive_colors(g);
  const bool positive_ok = checker.structure(colors, "A2", "A1", scratch);
  if (!checker.queer_structure(report) || !positive_ok) return report;
  colors.insert(colors.begin(), 0);
  checker.compute_strings(colors);
  checker.queer_local(report);
  return report;
}

}  // namespace qcrystal
