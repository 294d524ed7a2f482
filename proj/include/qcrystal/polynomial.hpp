#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace qcrystal {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

/// Sparse polynomial in x_1..x_n with exact integer coefficients. Zero
/// coefficients are never stored.
class SymPolynomial {
 public:
  explicit SymPolynomial(int nvars = 0);

  static SymPolynomial constant(int nvars, const Integer& c);
  static SymPolynomial monomial(const Exponent& e, const Integer& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponent& e) const;
  /// Sum of all coefficients, i.e. the value at (1, ..., 1).
  Integer coefficient_sum() const;

  void add_term(const Exponent& e, const Integer& c);

  /// Lexicographically greatest exponent with its coefficient.
  std::optional<std::pair<Exponent, Integer>> leading_term() const;

  SymPolynomial& operator+=(const SymPolynomial& o);
  SymPolynomial& operator-=(const SymPolynomial& o);
  SymPolynomial& operator*=(const Integer& c);
  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
  friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }
  friend SymPolynomial operator*(SymPolynomial a, const Integer& c) { return a *= c; }
  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
  friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

  Integer evaluate(std::span<const Integer> point) const;
  /// Image under the transposition of variables a and b (0-based).
  SymPolynomial swap_variables(int a, int b) const;

  /// Human-readable monomial form, leading term first: "x1^2*x2 + 2*x1*x2*x3".
  std::string to_string() const;
  /// {"nvars":3, "terms":[{"exp":[3,1,0],"coef":1}, ...]}, terms sorted
  /// lexicographically by exponent. Coefficients beyond 64 bits are strings.
  nlohmann::json to_json() const;
  static SymPolynomial from_json(const nlohmann::json& j);

 private:
  void check_vars(const SymPolynomial& o) const;

  int nvars_;
  std::map<Exponent, Integer> terms_;
};

/// True iff p is invariant under every adjacent transposition of variables.
bool is_symmetric(const SymPolynomial& p);

}  // namespace qcrystal
