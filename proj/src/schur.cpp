#include "qcrystal/schur.hpp"

#include <algorithm>
#include <functional>

#include "qcrystal/graph.hpp"

namespace qcrystal {

namespace {

template <class T>
SymPolynomial generating(std::span<const T> ts, int n) {
  SymPolynomial p(n);
  for (const T& t : ts) p.add_term(weight(t, n).counts, 1);
  return p;
}

std::string show(const Exponent& e) {
  std::string s = "(";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
  return s + ")";
}

}  // namespace

SymPolynomial generating_poly(std::span<const YoungTableau> ts, int n) { return generating(ts, n); }
SymPolynomial generating_poly(std::span<const ShiftedTableau> ts, int n) {
  return generating(ts, n);
}

SymPolynomial schur(const Partition& shape, int n) {
  const auto ts = enumerate_ssyt(shape, n);
  return generating_poly(std::span<const YoungTableau>(ts), n);
}

SymPolynomial schur_p(const StrictPartition& shape, int n) {
  const auto ts = enumerate_ssht(shape, n);
  return generating_poly(std::span<const ShiftedTableau>(ts), n);
}

std::vector<Partition> expand_p_in_schur(const StrictPartition& shape, int n) {
  const ColoredDigraph g = shifted_crystal(shape, n, false);
  std::vector<Partition> out;
  for (std::size_t v : highest_weights(g)) {
    auto lambda = g.vertex(v).weight->as_partition();
    if (!lambda)
      throw VerificationFailure("highest weight " + to_string(*g.vertex(v).weight) + " of " +
                                g.vertex(v).id + " is not a partition");
    out.push_back(*lambda);
  }
  std::sort(out.begin(), out.end(), std::greater<>());

  SymPolynomial sum(n);
  for (const auto& lambda : out) sum += schur(lambda, n);
  if (sum != schur_p(shape, n))
    throw VerificationFailure("sum of Schur polynomials over highest weights differs from P_(" +
                              shape.to_string() + ") in " + std::to_string(n) + " variables");
  return out;
}

std::map<StrictPartition, Integer> expand_product_in_p(const StrictPartition& a,
                                                       const StrictPartition& b, int nvars) {
  const int n = nvars > 0 ? nvars : std::max(1, a.size() + b.size());
  SymPolynomial residual = schur_p(a, n) * schur_p(b, n);
  std::map<StrictPartition, Integer> out;
  std::optional<Exponent> previous;
  while (auto lead = residual.leading_term()) {
    const auto& [e, c] = *lead;
    if (previous && !(e < *previous))
      throw InternalError("leading monomial did not decrease during elimination");
    previous = e;
    Exponent trimmed = e;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    bool strict = true;
    for (std::size_t k = 0; k + 1 < trimmed.size(); ++k)
      if (trimmed[k] <= trimmed[k + 1]) strict = false;
    if (!strict || c <= 0)
      throw VerificationFailure("product P_(" + a.to_string() + ") P_(" + b.to_string() +
                                ") in " + std::to_string(n) + " variables: leading term " +
                                c.str() + " x^" + show(e) +
                                (strict ? " has a non-positive coefficient"
                                        : " is not indexed by a strict partition"));
    StrictPartition eps(trimmed);
    out[eps] += c;
    residual -= schur_p(eps, n) * c;
  }
  return out;
}

}  // namespace qcrystal
