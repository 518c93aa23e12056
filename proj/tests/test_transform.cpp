#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "xyzq/transform.hpp"
#include "xyzq/verify.hpp"

using namespace xyzq;

namespace {

XyzCase C(const char* s) { return *XyzCase::parse(s); }

bool is_complete(const Graph& g) {
  const long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

// Degrees of the vertex part and the edge part, when each is constant.
std::pair<int, int> part_degrees(const Graph& g, int n) {
  const auto d = oracle::degrees(g);
  std::set<int> vs(d.begin(), d.begin() + n), es(d.begin() + n, d.end());
  REQUIRE(vs.size() == 1);
  REQUIRE(es.size() == 1);
  return {*vs.begin(), *es.begin()};
}

}  // namespace

TEST_CASE("case parsing and enumeration") {
  CHECK(list_cases().size() == 64);
  CHECK(list_cases().front().to_string() == "000");
  CHECK(list_cases().back().to_string() == "---");
  CHECK(list_cases()[1].to_string() == "001");
  CHECK(list_cases()[16].to_string() == "100");
  CHECK(std::count(list_cases().begin(), list_cases().end(), C("-+-")) == 1);
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(list_cases()[i].index() == static_cast<int>(i));
    CHECK(XyzCase::parse(list_cases()[i].to_string()) == list_cases()[i]);
  }
  CHECK_FALSE(XyzCase::parse("00").has_value());
  CHECK_FALSE(XyzCase::parse("0000").has_value());
  CHECK_FALSE(XyzCase::parse("0x1").has_value());
}

TEST_CASE("part_graph") {
  CHECK(part_graph(cycle(4), Sym::Zero).edge_count() == 0);
  CHECK(part_graph(cycle(4), Sym::Zero).vertex_count() == 4);
  CHECK(part_graph(cycle(4), Sym::One).same_edge_set(complete(4)));
  CHECK(part_graph(cycle(4), Sym::Plus) == cycle(4));
  CHECK(part_graph(cycle(5), Sym::Minus) == complement(cycle(5)));
}

TEST_CASE("cross_edges") {
  const Graph k2 = complete(2);
  const auto plus = cross_edges(k2, Sym::Plus);
  REQUIRE(plus.size() == 2);
  CHECK(plus[0].vertex == 0);
  CHECK(plus[0].edge == 0);
  CHECK(plus[1].vertex == 1);
  CHECK(cross_edges(k2, Sym::Minus).empty());
  CHECK(cross_edges(k2, Sym::Zero).empty());
  CHECK(cross_edges(complete(4), Sym::One).size() == 24);

  const Graph k3 = complete(3);
  const auto minus = cross_edges(k3, Sym::Minus);
  REQUIRE(minus.size() == 3);
  for (const auto& w : minus) CHECK_FALSE(k3.edges()[w.edge].incident_to(w.vertex));
}

TEST_CASE("named transformations") {
  const Graph k3 = complete(3);
  const Graph k33 = xyz_transform(k3, C("001"));
  CHECK(regularity(k33).degree == 3);
  CHECK(k33.edge_count() == 9);
  for (const auto& e : k33.edges()) CHECK((e.u < 3) != (e.v < 3));

  const Graph p3 = xyz_transform(complete(2), C("00+"));
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.same_edge_set(Graph::from_edge_list(3, {{0, 2}, {1, 2}})));

  CHECK(is_complete(xyz_transform(k3, C("111"))));
  CHECK(xyz_transform(k3, C("111")).vertex_count() == 6);

  const Graph total = xyz_transform(cycle(4), C("+++"));
  CHECK(total.vertex_count() == 8);
  CHECK(regularity(total).degree == 4);

  CHECK_THROWS_AS(xyz_transform(empty_graph(3), C("000")), Error);
  // irregular input is accepted by the construction
  CHECK(xyz_transform(Graph::from_edge_list(3, {{0, 1}, {1, 2}}), C("+++")).vertex_count() == 5);
}

TEST_CASE("structure over the corpus") {
  for (const auto& [id, g] : default_corpus()) {
    CAPTURE(id);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int r = *regularity(g).degree;
    for (const XyzCase& c : list_cases()) {
      const Graph t = xyz_transform(g, c);
      CHECK(t.vertex_count() == n + m);
      if (c.z == Sym::Zero) {
        // disjoint union: no edge crosses the two parts
        for (const auto& e : t.edges()) CHECK((e.u < n) == (e.v < n));
      }
    }
    CHECK(xyz_transform(g, C("000")).edge_count() == 0);
    CHECK(is_complete(xyz_transform(g, C("111"))));

    CHECK(part_degrees(xyz_transform(g, C("-01")), n) == std::pair{n + m - r - 1, n});
    CHECK(part_degrees(xyz_transform(g, C("+11")), n) == std::pair{m + r, m + n - 1});
    CHECK(part_degrees(xyz_transform(g, C("0+1")), n) == std::pair{m, n + 2 * r - 2});
    CHECK(part_degrees(xyz_transform(g, C("+++")), n) == std::pair{2 * r, 2 * r});
    CHECK(part_degrees(xyz_transform(g, C("1--")), n) == std::pair{n + m - r - 1, n + m - 2 * r - 1});
    CHECK(part_degrees(xyz_transform(g, C("10-")), n) == std::pair{n + m - r - 1, n - 2});
  }
}
