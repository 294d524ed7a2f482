#include <doctest.h>

#include <functional>
#include <set>

#include "figures.hpp"
#include "qcrystal/graph.hpp"
#include "qcrystal/operators.hpp"
#include "qcrystal/rectification.hpp"

using namespace qcrystal;

namespace {

ShiftedTableau shifted_by_id(const StrictPartition& shape, int n, const std::string& id) {
  for (const auto& t : enumerate_ssht(shape, n))
    if (t.id() == id) return t;
  FAIL("no tableau " << id);
  return {};
}

// Every filling of the symmetric shape that keeps one cell of each mirror
// pair, accepted by the constructor.
std::size_t count_symmetric(const StrictPartition& base, int n) {
  const Partition shape = symmetric_shape(base);
  std::vector<Cell> upper;
  for (const auto& c : shape.cells())
    if (c.col >= c.row) upper.push_back(c);
  std::size_t count = 0;
  std::map<Cell, int> entries;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == upper.size()) {
      try {
        SymmetricTableau s(PartialFilling(shape, entries));
        ++count;
      } catch (const std::invalid_argument&) {
      }
      return;
    }
    const Cell c = upper[k];
    const Cell mirror{c.col, c.row};
    for (int v = 1; v <= n; ++v) {
      entries[c] = v;
      rec(k + 1);
      entries.erase(c);
      if (!(c == mirror)) {
        entries[mirror] = v;
        rec(k + 1);
        entries.erase(mirror);
      }
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_SUITE("rectification") {

TEST_CASE("symmetric shapes") {
  CHECK(symmetric_shape(StrictPartition({6, 4, 3, 1})) == Partition({6, 5, 5, 4, 3, 1}));
  CHECK(symmetric_shape(StrictPartition({3, 1})) == Partition({3, 2, 1}));
  CHECK(symmetric_shape(StrictPartition({1})) == Partition({1}));
}

TEST_CASE("symmetric form moves marks across the diagonal") {
  auto t = shifted_by_id(StrictPartition({3, 1}), 3, "1,2',3'/2");
  auto s = to_symmetric(t);
  CHECK(s.filling().shape() == Partition({3, 2, 1}));
  CHECK(s.filling().get({2, 1}) == 2);
  CHECK(s.filling().get({3, 1}) == 3);
  CHECK(s.filling().is_hole({1, 2}));
  CHECK(s.filling().render() == "3\n2 2\n1 . .\n");
  CHECK(from_symmetric(s) == t);
}

TEST_CASE("symmetric round trip is exact") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_ssht(shape, n)) {
          auto s = to_symmetric(t);
          CHECK(from_symmetric(s) == t);
          CHECK(to_symmetric(from_symmetric(s)).filling() == s.filling());
        }
}

TEST_CASE("symmetric tableaux are as many as shifted ones") {
  CHECK(count_symmetric(StrictPartition({3, 1}), 3) == 24);
  for (int k = 1; k <= 4; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 1; n <= 3; ++n)
        CHECK(count_symmetric(shape, n) == enumerate_ssht(shape, n).size());
}

TEST_CASE("invalid symmetric fillings are rejected") {
  const Partition shape({3, 2, 1});
  CHECK_THROWS(SymmetricTableau(PartialFilling(shape, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1},
                                                       {{2, 2}, 2}, {{1, 3}, 2}})));
  CHECK_THROWS(SymmetricTableau(PartialFilling(shape, {{{1, 2}, 1}, {{2, 2}, 2}, {{1, 3}, 2}})));
  CHECK_THROWS(SymmetricTableau(PartialFilling(Partition({2, 1, 1}), {{{1, 1}, 1}})));
  CHECK_THROWS(PartialFilling(shape, {{{4, 1}, 1}}));
}

TEST_CASE("rect of a shifted tableau") {
  StrictPartition s({3, 1});
  CHECK(rect(shifted_by_id(s, 3, "1,2',2/2")).id() == "1,2,2/2");
  std::vector<std::string> trace;
  auto y = rect(shifted_by_id(s, 3, "1,1,2'/2"), &trace);
  CHECK(y.shape() == Partition({2, 2}));
  CHECK_FALSE(trace.empty());
}

TEST_CASE("rect carries the top component onto the young crystal") {
  std::map<std::string, std::string> young_ids = figures::young31;
  auto g = shifted_crystal(StrictPartition({3, 1}), 3, false);
  auto top = components(g);
  for (const auto& comp : top) {
    auto sub = g.induced(comp);
    if (!sub.find("1,1,1/2")) continue;
    for (const auto& [label, id] : figures::shifted31) {
      if (!sub.find(id)) continue;
      CAPTURE(label);
      auto t = std::get<ShiftedTableau>(sub.vertex(*sub.find(id)).tableau);
      CHECK(rect(t).id() == young_ids.at(label));
    }
  }
}

TEST_CASE("rect commutes with lowering") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 2; n <= 4; ++n)
        for (const auto& t : enumerate_ssht(shape, n)) {
          const auto r = rect(t);
          CHECK(weight(r, n) == weight(t, n));
          for (int i = 1; i < n; ++i) {
            auto left = f_shifted(t, i);
            auto right = f_young(r, i);
            REQUIRE(left.has_value() == right.has_value());
            if (left) CHECK(rect(*left) == *right);
          }
        }
}

TEST_CASE("rectify a partial filling") {
  PartialFilling p(Partition({2, 2}), {{{1, 1}, 1}, {{2, 1}, 2}, {{2, 2}, 3}});
  CHECK(p.holes() == std::vector<Cell>{{1, 2}});
  std::vector<std::string> trace;
  auto y = rectify(p, &trace);
  CHECK(y.id() == "1,3/2");
  CHECK(trace.size() == 1);
  CHECK_THROWS_AS(rectify(PartialFilling(Partition({2, 1}), {{{1, 2}, 1}, {{2, 1}, 2}})), InternalError);
  auto j = to_json(p);
  CHECK(j["holes"].size() == 1);
  CHECK(partial_from_json(j) == p);
}

}
