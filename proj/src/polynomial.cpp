#include "qcrystal/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qcrystal {

SymPolynomial::SymPolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative number of variables");
}

SymPolynomial SymPolynomial::constant(int nvars, const Integer& c) {
  SymPolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

SymPolynomial SymPolynomial::monomial(const Exponent& e, const Integer& c) {
  SymPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Integer SymPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer SymPolynomial::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void SymPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent length does not match the number of variables");
  for (int a : e)
    if (a < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::pair<Exponent, Integer>> SymPolynomial::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.rbegin();
}

void SymPolynomial::check_vars(const SymPolynomial& o) const {
  if (o.nvars_ != nvars_)
    throw std::invalid_argument("polynomials in different numbers of variables");
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPolynomial& SymPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
  a.check_vars(b);
  SymPolynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Integer SymPolynomial::evaluate(std::span<const Integer> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has the wrong dimension");
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    for (int k = 0; k < nvars_; ++k) term *= boost::multiprecision::pow(point[k], e[k]);
    total += term;
  }
  return total;
}

SymPolynomial SymPolynomial::swap_variables(int a, int b) const {
  if (a < 0 || b < 0 || a >= nvars_ || b >= nvars_)
    throw std::invalid_argument("variable index out of range");
  SymPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[a], f[b]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string SymPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant_term = std::all_of(e.begin(), e.end(), [](int a) { return a == 0; });
    bool need_star = false;
    if (mag != 1 || constant_term) {
      os << mag;
      need_star = true;
    }
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

nlohmann::json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer coefficient_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

nlohmann::json SymPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exp", e}, {"coef", coefficient_json(c)}});
  return {{"nvars", nvars_}, {"terms", terms}};
}

SymPolynomial SymPolynomial::from_json(const nlohmann::json& j) {
  try {
    SymPolynomial p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms"))
      p.add_term(t.at("exp").get<Exponent>(), coefficient_from_json(t.at("coef")));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

bool is_symmetric(const SymPolynomial& p) {
  for (int k = 0; k + 1 < p.nvars(); ++k)
    if (p.swap_variables(k, k + 1) != p) return false;
  return true;
}

}  // namespace qcrystal
