#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcrystal/schur.hpp"

using namespace qcrystal;

namespace {

SymPolynomial product_side(const std::map<StrictPartition, Integer>& coeffs, int n) {
  SymPolynomial sum(n);
  for (const auto& [shape, c] : coeffs) sum += oracle::schur_p(shape.parts(), n) * c;
  return sum;
}

}  // namespace

TEST_SUITE("polynomials") {

TEST_CASE("arithmetic") {
  auto x = SymPolynomial::monomial({1, 0});
  auto y = SymPolynomial::monomial({0, 1});
  auto p = (x + y) * (x + y);
  CHECK(p.coefficient({1, 1}) == 2);
  CHECK(p.terms().size() == 3);
  CHECK(p.to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK((p - p).is_zero());
  CHECK((p - p).to_string() == "0");
  CHECK(p.coefficient_sum() == 4);
  CHECK(is_symmetric(p));
  CHECK_FALSE(is_symmetric(p + x));
  CHECK((x * Integer(3)).swap_variables(0, 1) == y * Integer(3));
  const std::vector<Integer> pt{2, -5};
  CHECK(p.evaluate(pt) == 9);
  CHECK_THROWS(p + SymPolynomial(3));
  CHECK_THROWS(SymPolynomial(2).add_term({1}, 1));
  CHECK_THROWS(SymPolynomial(1).add_term({-1}, 1));
}

TEST_CASE("json keeps large coefficients exact") {
  Integer big = Integer(1) << 100;
  auto p = SymPolynomial::monomial({2, 1}, big) + SymPolynomial::monomial({0, 3}, -7);
  auto j = p.to_json();
  CHECK(j["terms"][1]["coef"].is_string());
  CHECK(SymPolynomial::from_json(j) == p);
}

TEST_CASE("s_(3,1) in three variables") {
  auto s = schur(Partition({3, 1}), 3);
  CHECK(s.to_string() ==
        "x1^3*x2 + x1^3*x3 + x1^2*x2^2 + 2*x1^2*x2*x3 + x1^2*x3^2 + x1*x2^3 + 2*x1*x2^2*x3 + "
        "2*x1*x2*x3^2 + x1*x3^3 + x2^3*x3 + x2^2*x3^2 + x2*x3^3");
}

TEST_CASE("P_(3,1) in three variables") {
  auto p = schur_p(StrictPartition({3, 1}), 3);
  CHECK(p.to_string() ==
        "x1^3*x2 + x1^3*x3 + 2*x1^2*x2^2 + 4*x1^2*x2*x3 + 2*x1^2*x3^2 + x1*x2^3 + "
        "4*x1*x2^2*x3 + 4*x1*x2*x3^2 + x1*x3^3 + x2^3*x3 + 2*x2^2*x3^2 + x2*x3^3");
}

TEST_CASE("Schur polynomials agree with Jacobi-Trudi") {
  std::mt19937 rng(7);
  for (int k = 1; k <= 6; ++k)
    for (const auto& shape : partitions_of(k))
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(shape.to_string());
        CAPTURE(n);
        auto s = schur(shape, n);
        auto jt = oracle::schur(shape.parts(), n);
        CHECK(s == jt);
        CHECK(is_symmetric(s));
        auto pt = oracle::random_point(n, rng);
        CHECK(s.evaluate(pt) == jt.evaluate(pt));
      }
}

TEST_CASE("P polynomials agree with the Pfaffian formula") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(shape.to_string());
        CAPTURE(n);
        auto p = schur_p(shape, n);
        CHECK(p == oracle::schur_p(shape.parts(), n));
        CHECK(p == oracle::generating(shape.parts(), n, true));
        CHECK(is_symmetric(p));
      }
}

TEST_CASE("P_(3,1) expands into three Schur polynomials") {
  auto parts = expand_p_in_schur(StrictPartition({3, 1}), 3);
  CHECK(parts == std::vector<Partition>{Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});
  for (int k = 1; k <= 6; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 1; n <= 4; ++n) {
        SymPolynomial sum(n);
        for (const auto& l : expand_p_in_schur(shape, n)) sum += oracle::schur(l.parts(), n);
        CHECK(sum == oracle::schur_p(shape.parts(), n));
      }
}

TEST_CASE("products of P polynomials") {
  auto one = expand_product_in_p(StrictPartition({1}), StrictPartition({1}));
  CHECK(one == std::map<StrictPartition, Integer>{{StrictPartition({2}), 1}});
  auto two = expand_product_in_p(StrictPartition({2}), StrictPartition({1}));
  CHECK(two == std::map<StrictPartition, Integer>{{StrictPartition({3}), 1}, {StrictPartition({2, 1}), 1}});
  for (int ka = 1; ka <= 4; ++ka)
    for (int kb = 1; ka + kb <= 5; ++kb)
      for (const auto& a : strict_partitions_of(ka))
        for (const auto& b : strict_partitions_of(kb)) {
          const int n = ka + kb;
          auto c = expand_product_in_p(a, b);
          for (const auto& [shape, coef] : c) CHECK(coef > 0);
          CHECK(product_side(c, n) == oracle::schur_p(a.parts(), n) * oracle::schur_p(b.parts(), n));
        }
}

}
