#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcrystal/tableau_io.hpp"
#include "qcrystal/tableaux.hpp"

using namespace qcrystal;

namespace {

template <class T>
std::set<std::string> id_set(const std::vector<T>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.id());
  return out;
}

Violation young_violation(const Partition& shape, std::vector<std::vector<int>> rows) {
  try {
    validate_young(shape, std::move(rows));
  } catch (const InvalidTableau& e) {
    return e.kind();
  }
  FAIL("accepted");
  return Violation::ShapeMismatch;
}

Violation shifted_violation(const StrictPartition& shape, std::vector<std::vector<Letter>> rows) {
  try {
    validate_shifted(shape, std::move(rows));
  } catch (const InvalidTableau& e) {
    return e.kind();
  }
  FAIL("accepted");
  return Violation::ShapeMismatch;
}

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("letters order marked before unmarked") {
  CHECK(marked(1) < unmarked(1));
  CHECK(unmarked(1) < marked(2));
  CHECK(marked(2) < unmarked(2));
  CHECK(to_string(marked(3)) == "3'");
  CHECK(parse_letter("2'") == marked(2));
  CHECK(parse_letter("7") == unmarked(7));
  CHECK_THROWS(parse_letter("0"));
  CHECK_THROWS(parse_letter("x"));
}

TEST_CASE("partitions") {
  auto p = Partition::parse("3,1");
  CHECK(p.size() == 4);
  CHECK(p.conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({3, 2, 1}).is_self_conjugate());
  CHECK_FALSE(p.is_self_conjugate());
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(StrictPartition({2, 2}));
  CHECK(partitions_of(6).size() == 11);
  CHECK(strict_partitions_of(6).size() == 4);
  CHECK(strict_partitions_of(7).size() == 5);
  CHECK(partitions_of(4).front() == Partition({4}));

  StrictPartition g({3, 1});
  CHECK(g.contains({2, 2}));
  CHECK_FALSE(g.contains({2, 1}));
  CHECK(g.last_col(1) == 3);
  CHECK(g.cells().size() == 4);
}

TEST_CASE("young validation names the violation") {
  Partition s({2, 1});
  CHECK(young_violation(s, {{2, 1}, {3}}) == Violation::RowOrder);
  CHECK(young_violation(s, {{1, 1}, {1}}) == Violation::ColumnRepeat);
  CHECK(young_violation(s, {{2, 2}, {1}}) == Violation::ColumnOrder);
  CHECK(young_violation(s, {{1, 1}}) == Violation::ShapeMismatch);
  CHECK(young_violation(s, {{0, 1}, {2}}) == Violation::NonPositive);
  CHECK(validate_young(s, {{1, 1}, {2}}).id() == "1,1/2");
}

TEST_CASE("shifted validation names the violation") {
  StrictPartition s({3, 1});
  CHECK(shifted_violation(s, {{marked(1), unmarked(1), unmarked(1)}, {unmarked(2)}}) ==
        Violation::DiagonalMark);
  CHECK(shifted_violation(s, {{unmarked(1), marked(2), marked(2)}, {unmarked(3)}}) ==
        Violation::RowMarkedRepeat);
  CHECK(shifted_violation(s, {{unmarked(1), unmarked(2), unmarked(2)}, {unmarked(2)}}) ==
        Violation::ColumnRepeat);
  CHECK(shifted_violation(s, {{unmarked(1), unmarked(2), unmarked(1)}, {unmarked(3)}}) ==
        Violation::RowOrder);
  CHECK(validate_shifted(s, {{unmarked(1), marked(2), unmarked(2)}, {unmarked(2)}}).id() ==
        "1,2',2/2");
}

TEST_CASE("counts of the (3,1) families") {
  CHECK(enumerate_ssyt(Partition({3, 1}), 3).size() == 15);
  CHECK(enumerate_ssht(StrictPartition({3, 1}), 3).size() == 24);
}

TEST_CASE("young enumeration agrees with brute force") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& shape : partitions_of(k))
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(shape.to_string());
        CAPTURE(n);
        CHECK(id_set(enumerate_ssyt(shape, n)) == oracle::ids(shape.parts(), n, false));
      }
}

TEST_CASE("shifted enumeration agrees with brute force") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(shape.to_string());
        CAPTURE(n);
        CHECK(id_set(enumerate_ssht(shape, n)) == oracle::ids(shape.parts(), n, true));
      }
}

TEST_CASE("enumeration yields distinct valid tableaux") {
  for (const auto& t : enumerate_ssht(StrictPartition({4, 2}), 4)) {
    auto again = validate_shifted(t.shape(), t.rows());
    CHECK(again == t);
  }
}

TEST_CASE("weights and words") {
  auto t = validate_shifted(StrictPartition({3, 1}),
                            {{unmarked(1), marked(2), unmarked(2)}, {unmarked(2)}});
  CHECK(weight(t, 3).counts == std::vector<int>{1, 3, 0});
  auto w = hook_word(t);
  CHECK(w.letters == std::vector<Letter>{marked(2), unmarked(2), unmarked(1), unmarked(2)});

  auto y = validate_young(Partition({3, 1}), {{1, 1, 2}, {3}});
  auto rw = row_word(y);
  CHECK(rw.letters == std::vector<Letter>{unmarked(3), unmarked(1), unmarked(1), unmarked(2)});
  CHECK(weight(y, 4).counts == std::vector<int>{2, 1, 1, 0});
  CHECK(weight(y, 3).as_partition() == Partition({2, 1, 1}));
  CHECK(Weight{{1, 2, 0}}.as_partition() == std::nullopt);
  CHECK(Weight{{2, 1, 0}}.as_partition() == Partition({2, 1}));
}

TEST_CASE("json round trip") {
  for (const auto& t : enumerate_ssht(StrictPartition({3, 1}), 3)) {
    auto back = shifted_from_json(to_json(t));
    CHECK(back == t);
  }
  for (const auto& t : enumerate_ssyt(Partition({2, 2}), 3)) CHECK(young_from_json(to_json(t)) == t);
  auto bad = to_json(enumerate_ssyt(Partition({2, 1}), 2).front());
  bad["rows"][0][0]["v"] = 2;
  CHECK_THROWS_AS(young_from_json(bad), InvalidTableau);
}

}
