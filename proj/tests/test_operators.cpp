#include <doctest.h>

#include <map>
#include <set>

#include "figures.hpp"
#include "qcrystal/operators.hpp"
#include "qcrystal/tableaux.hpp"

using namespace qcrystal;

namespace {

Word word_of(std::initializer_list<int> values) {
  Word w;
  for (int v : values) {
    w.letters.push_back(unmarked(v));
    w.origins.push_back({0, 0});
  }
  return w;
}

std::vector<int> shift_of(const Weight& before, const Weight& after) {
  std::vector<int> d;
  for (std::size_t k = 0; k < before.counts.size(); ++k) d.push_back(after.counts[k] - before.counts[k]);
  return d;
}

std::vector<int> lowering_shift(int n, int i) {
  std::vector<int> d(n, 0);
  d[i - 1] = -1;
  d[i] = 1;
  return d;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("m profile") {
  auto p = m_profile(word_of({2, 1, 1, 2, 1}), 1);
  CHECK(p.values == std::vector<int>{-1, 0, 1, 0, 1});
  CHECK(p.max == 1);
  CHECK(p.argmax_first == 3);
  CHECK(p.final_value == 1);
  CHECK(p.lowerable());
  CHECK_FALSE(m_profile(word_of({2, 1}), 1).lowerable());
  CHECK_FALSE(m_profile(Word{}, 1).lowerable());
  CHECK_THROWS(m_profile(word_of({4}), 1, 3));
  CHECK_THROWS(m_profile(word_of({1}), 3, 3));
}

TEST_CASE("young lowering reproduces the (3,1) drawing") {
  std::set<figures::EdgeKey> drawn;
  for (const auto& e : figures::resolve(figures::young31, figures::young31_edges)) drawn.insert(e);
  std::set<figures::EdgeKey> computed;
  for (const auto& t : enumerate_ssyt(Partition({3, 1}), 3))
    for (int i = 1; i <= 2; ++i)
      if (auto f = f_young(t, i)) computed.insert({t.id(), f->id(), i});
  CHECK(computed == drawn);
}

TEST_CASE("shifted lowering reproduces the (3,1) drawing") {
  std::set<figures::EdgeKey> drawn;
  for (const auto& e : figures::resolve(figures::shifted31, figures::shifted31_edges)) drawn.insert(e);
  std::set<figures::EdgeKey> computed;
  for (const auto& t : enumerate_ssht(StrictPartition({3, 1}), 3))
    for (int i = 1; i <= 2; ++i)
      if (auto f = f_shifted(t, i)) computed.insert({t.id(), f->id(), i});
  CHECK(computed == drawn);
}

TEST_CASE("queer lowering reproduces the 0-edges of the drawing") {
  std::set<figures::EdgeKey> drawn;
  for (const auto& e : figures::resolve(figures::shifted31, figures::queer31_zero_edges)) drawn.insert(e);
  std::set<figures::EdgeKey> computed;
  for (const auto& t : enumerate_ssht(StrictPartition({3, 1}), 3))
    if (auto f = f_queer(t)) computed.insert({t.id(), f->id(), 0});
  CHECK(computed == drawn);
}

TEST_CASE("queer lowering rules") {
  StrictPartition s({3, 1});
  auto diag = validate_shifted(s, {{unmarked(1), unmarked(2), unmarked(2)}, {unmarked(3)}});
  auto f = f_queer(diag);
  REQUIRE(f);
  CHECK(f->id() == "2,2,2/3");
  auto blocked = validate_shifted(s, {{unmarked(1), marked(2), unmarked(2)}, {unmarked(2)}});
  CHECK_FALSE(f_queer(blocked));
  auto none = validate_shifted(s, {{unmarked(2), unmarked(2), unmarked(2)}, {unmarked(3)}});
  CHECK_FALSE(f_queer(none));
}

TEST_CASE("young lowering and raising are inverse and shift the weight") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& shape : partitions_of(k))
      for (int n = 2; n <= 4; ++n) {
        std::set<std::string> ids;
        for (const auto& t : enumerate_ssyt(shape, n)) ids.insert(t.id());
        for (const auto& t : enumerate_ssyt(shape, n))
          for (int i = 1; i < n; ++i) {
            if (auto f = f_young(t, i)) {
              CHECK(ids.count(f->id()));
              CHECK(shift_of(weight(t, n), weight(*f, n)) == lowering_shift(n, i));
              auto back = e_young(*f, i);
              REQUIRE(back);
              CHECK(*back == t);
            }
            if (auto e = e_young(t, i)) {
              auto again = f_young(*e, i);
              REQUIRE(again);
              CHECK(*again == t);
            }
          }
      }
}

TEST_CASE("shifted lowering is injective and shifts the weight") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 2; n <= 4; ++n) {
        const auto all = enumerate_ssht(shape, n);
        std::set<std::string> ids;
        for (const auto& t : all) ids.insert(t.id());
        for (int i = 1; i < n; ++i) {
          std::map<std::string, std::string> preimage;
          for (const auto& t : all) {
            auto step = f_shifted_step(t, i);
            if (!step) continue;
            const auto id = step->result.id();
            CHECK(ids.count(id));
            CHECK(shift_of(weight(t, n), weight(step->result, n)) == lowering_shift(n, i));
            auto [it, fresh] = preimage.emplace(id, t.id());
            CHECK_MESSAGE(fresh, id << " has preimages " << it->second << " and " << t.id());
          }
        }
      }
}

TEST_CASE("every shifted rule fires") {
  std::set<ShiftedRule> seen;
  for (int k = 1; k <= 6; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 3; n <= 4; ++n)
        for (const auto& t : enumerate_ssht(shape, n))
          for (int i = 1; i < n; ++i)
            if (auto s = f_shifted_step(t, i)) seen.insert(s->rule);
  CHECK(seen.size() == 6);
}

}
