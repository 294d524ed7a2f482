#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qcrystal/axioms.hpp"

using namespace qcrystal;

namespace {

ColoredDigraph load(const std::string& name) {
  std::ifstream in(std::string(QCRYSTAL_TEST_DATA) + "/negative/" + name + ".json");
  REQUIRE(in);
  return read_graph_json(in);
}

AxiomReport check(const ColoredDigraph& g) {
  return g.queer() ? check_queer_regular(g) : check_regular(g);
}

}  // namespace

TEST_SUITE("axioms") {

TEST_CASE("young crystals are regular") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& shape : partitions_of(k))
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(shape.to_string());
        auto r = check_regular(young_crystal(shape, n));
        CHECK_MESSAGE(r.passed(), r.to_text());
      }
}

TEST_CASE("shifted crystals are regular and queer graphs queer regular") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& shape : strict_partitions_of(k))
      for (int n = 2; n <= 4; ++n) {
        CAPTURE(shape.to_string());
        CAPTURE(n);
        auto r = check_regular(shifted_crystal(shape, n, false));
        CHECK_MESSAGE(r.passed(), r.to_text());
        auto q = check_queer_regular(shifted_crystal(shape, n, true));
        CHECK_MESSAGE(q.passed(), q.to_text());
      }
}

TEST_CASE("queer edges are ignored by the regular check") {
  auto g = shifted_crystal(StrictPartition({3, 1}), 3, true);
  CHECK(check_regular(g).passed());
}

TEST_CASE("negative corpus fails exactly the named axiom") {
  for (std::string name : {"A1", "A2", "A3", "A4", "A5", "A6", "B0", "B1", "B2", "B3", "B5", "B6"}) {
    CAPTURE(name);
    auto r = check(load(name));
    CHECK(r.failed_axioms() == std::set<std::string>{name});
  }
  auto r = check_queer_regular(load("B1_string"));
  CHECK(r.failed_axioms() == std::set<std::string>{"B1"});
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().id() == "B1.string");
}

TEST_CASE("B0 carries the failing regular axiom as its clause") {
  auto r = check_queer_regular(load("B0"));
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].id() == "B0.A3");
}

TEST_CASE("deleting a 0-edge from the (3,1) queer graph breaks it") {
  auto g = shifted_crystal(StrictPartition({3, 1}), 3, true);
  const auto c1 = *g.find("1,1,1/2");
  const auto d2 = *g.find("1,1,2'/2");
  REQUIRE(g.remove_edge(c1, d2, 0) == 1);
  auto r = check_queer_regular(g);
  CHECK(r.failed_axioms().count("B1"));
  CHECK(check_regular(g).passed());
}

TEST_CASE("a doubled edge breaks the degree axiom only") {
  auto g = young_crystal(Partition({2}), 2);
  g.add_edge(0, 2, 1);
  auto r = check_regular(g);
  CHECK(r.failed_axioms() == std::set<std::string>{"A2"});
}

TEST_CASE("reports serialise") {
  auto r = check(load("A3"));
  auto j = r.to_json();
  CHECK(j["passed"] == false);
  CHECK(j["violations"].size() == r.violations.size());
  CHECK(r.to_text().find("A3") != std::string::npos);
  CHECK(check_regular(young_crystal(Partition({1}), 2)).to_json()["passed"] == true);
}

}
