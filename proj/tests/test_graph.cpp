#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "figures.hpp"
#include "qcrystal/graph.hpp"

using namespace qcrystal;

namespace {

std::set<figures::EdgeKey> edge_set(const ColoredDigraph& g) {
  std::set<figures::EdgeKey> out;
  for (const auto& e : g.edges()) out.insert({g.vertex(e.from).id, g.vertex(e.to).id, e.color});
  return out;
}

template <class Edges>
std::set<figures::EdgeKey> as_set(const Edges& es) {
  return {es.begin(), es.end()};
}

std::vector<std::string> ids(const ColoredDigraph& g, const std::vector<std::size_t>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex(v).id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("young (3,1) crystal matches the drawing") {
  auto g = young_crystal(Partition({3, 1}), 3);
  CHECK(g.vertex_count() == 15);
  CHECK(edge_set(g) == as_set(figures::resolve(figures::young31, figures::young31_edges)));
  CHECK(components(g).size() == 1);
  auto hw = highest_weights(g);
  REQUIRE(hw.size() == 1);
  CHECK(g.vertex(hw[0]).id == "1,1,1/2");
  CHECK(g.vertex(hw[0]).weight->counts == std::vector<int>{3, 1, 0});
}

TEST_CASE("shifted (3,1) crystal has three components") {
  auto g = shifted_crystal(StrictPartition({3, 1}), 3, false);
  CHECK(edge_set(g) == as_set(figures::resolve(figures::shifted31, figures::shifted31_edges)));
  CHECK(components(g).size() == 3);
  std::multiset<std::vector<int>> weights;
  for (auto v : highest_weights(g)) weights.insert(g.vertex(v).weight->counts);
  CHECK(weights == std::multiset<std::vector<int>>{{3, 1, 0}, {2, 2, 0}, {2, 1, 1}});
}

TEST_CASE("queer (3,1) graph matches the drawing") {
  auto g = shifted_crystal(StrictPartition({3, 1}), 3, true);
  auto drawn = as_set(figures::resolve(figures::shifted31, figures::shifted31_edges));
  for (const auto& e : figures::resolve(figures::shifted31, figures::queer31_zero_edges)) drawn.insert(e);
  CHECK(edge_set(g) == drawn);
  CHECK(g.edges().size() == 38);
  CHECK(components(g).size() == 1);
  const std::vector<int> all{0, 1, 2};
  CHECK(ids(g, sources(g, all)) == std::vector<std::string>{"1,1,1/2", "1,1,3'/2"});
}

TEST_CASE("queer graphs need two letters") {
  CHECK_THROWS_AS(shifted_crystal(StrictPartition({2}), 1, true), std::invalid_argument);
  CHECK(shifted_crystal(StrictPartition({2}), 1, false).vertex_count() == 1);
}

TEST_CASE("string statistics") {
  auto g = young_crystal(Partition({3, 1}), 3);
  auto v = *g.find("1,1,2/2");
  auto s1 = string_stats(g, v, 1);
  CHECK(s1.delta == 1);
  CHECK(s1.epsilon == 1);
  auto s2 = string_stats(g, v, 2);
  CHECK(s2.delta == 0);
  CHECK(s2.epsilon == 2);

  ColoredDigraph loop(2);
  loop.add_vertex({"a", std::nullopt, {}});
  loop.add_vertex({"b", std::nullopt, {}});
  loop.add_edge(0, 1, 1);
  loop.add_edge(1, 0, 1);
  CHECK_THROWS_AS(string_stats(loop, 0, 1), MonochromaticCycle);
}

TEST_CASE("lower and raise need a single edge") {
  ColoredDigraph g(2);
  for (auto id : {"a", "b", "c"}) g.add_vertex({id, std::nullopt, {}});
  g.add_edge(0, 1, 1);
  CHECK(g.lower(0, 1) == 1u);
  CHECK(g.raise(1, 1) == 0u);
  g.add_edge(0, 2, 1);
  CHECK_FALSE(g.lower(0, 1));
  CHECK(g.remove_edge(0, 2, 1) == 1);
  CHECK(g.lower(0, 1) == 1u);
  CHECK_THROWS(g.add_vertex({"a", std::nullopt, {}}));
}

TEST_CASE("the top shifted component is isomorphic to the young crystal") {
  auto y = young_crystal(Partition({3, 1}), 3);
  auto s = shifted_crystal(StrictPartition({3, 1}), 3, false);
  auto comps = components(s);
  bool found = false;
  for (const auto& c : comps) {
    auto sub = s.induced(c);
    if (sub.find("1,1,1/2")) {
      std::vector<std::size_t> map;
      REQUIRE(is_isomorphic(sub, y, &map) == Isomorphism::Isomorphic);
      CHECK(y.vertex(map[*sub.find("1,2',2/2")]).id == "1,2,2/2");
      found = true;
    } else {
      CHECK(is_isomorphic(sub, y) == Isomorphism::NotIsomorphic);
    }
  }
  CHECK(found);
}

TEST_CASE("raising by lookup") {
  auto g = shifted_crystal(StrictPartition({3, 1}), 3, true);
  auto t = std::get<ShiftedTableau>(g.vertex(*g.find("1,1,2'/2")).tableau);
  auto up = e_queer(g, t);
  REQUIRE(up);
  CHECK(up->id() == "1,1,1/2");
  CHECK_FALSE(e_shifted(g, t, 1));
  auto other = shifted_crystal(StrictPartition({2}), 3, false);
  CHECK_THROWS_AS(e_shifted(other, t, 1), std::invalid_argument);
}

TEST_CASE("json and dot output") {
  auto g = shifted_crystal(StrictPartition({2, 1}), 3, true);
  std::stringstream ss;
  write_json(ss, g);
  auto back = read_graph_json(ss);
  CHECK(back.queer());
  CHECK(back.degree() == g.degree());
  CHECK(edge_set(back) == edge_set(g));
  std::ostringstream dot;
  write_dot(dot, g);
  CHECK(dot.str().find("digraph") != std::string::npos);
  std::istringstream broken(R"({"degree":2,"vertices":[{"id":"a"}],"edges":[{"from":"a","to":"z","color":1}]})");
  CHECK_THROWS(read_graph_json(broken));
}

}
