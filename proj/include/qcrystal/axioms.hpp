#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcrystal/graph.hpp"

namespace qcrystal {

struct AxiomViolation {
  std::string axiom;   // "A1".."A6", "B0".."B6"
  std::string clause;  // empty for single-clause axioms, e.g. "E", "i>=2"
  std::vector<std::string> vertices;
  std::vector<int> colors;
  std::string detail;

  /// axiom, or axiom.clause when the axiom has several clauses.
  std::string id() const { return clause.empty() ? axiom : axiom + "." + clause; }
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }
  /// Distinct axiom names that failed, e.g. {"A5", "B3"}.
  std::set<std::string> failed_axioms() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Stembridge regularity (A1-A6) over colors 1..degree-1; color 0 edges are
/// ignored. A3-A6 are evaluated only when A1 and A2 hold, since string
/// lengths are not defined otherwise.
AxiomReport check_regular(const ColoredDigraph& g);

/// Queer regularity (B0-B6). B0 reports every regular-axiom failure of the
/// nonzero colors under the clause of the failing A-axiom.
AxiomReport check_queer_regular(const ColoredDigraph& g);

}  // namespace qcrystal
