#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "oracle.hpp"
#include "xyzq/graph.hpp"

using namespace xyzq;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected xyzq::Error");
  return ErrorCode::ParseError;
}

Graph path3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("from_edge_list keeps order and rejects bad input") {
  const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.edges()[1] == Edge{1, 2});
  CHECK(k3.same_edge_set(complete(3)));

  CHECK(code_of([] { Graph::from_edge_list(3, {{0, 1}, {0, 1}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { Graph::from_edge_list(3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { Graph::from_edge_list(3, {{1, 1}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { Graph::from_edge_list(3, {{0, 3}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { Graph::from_edge_list(2, {{-1, 0}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { Graph::from_edge_list(0, {}); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("generators") {
  const Graph c4 = cycle(4);
  CHECK(c4.edge_count() == 4);
  CHECK(regularity(c4).degree == 2);
  CHECK(c4.edges()[3] == Edge{3, 0});

  const Graph k4 = complete(4);
  CHECK(k4.edge_count() == 6);
  CHECK(regularity(k4).degree == 3);

  const Graph p = petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (int d : oracle::degrees(p)) CHECK(d == 3);

  CHECK(regularity(hypercube(3)).degree == 3);
  CHECK(hypercube(3).edge_count() == 12);
  CHECK(regularity(complete_bipartite(3)).degree == 3);

  const std::vector<int> s{1, 2};
  const Graph c8 = circulant(8, s);
  CHECK(regularity(c8).degree == 4);
  CHECK(c8.edge_count() == 16);

  const std::vector<int> half{4};
  CHECK(regularity(circulant(8, half)).degree == 1);

  CHECK(code_of([] { cycle(2); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { complete(0); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { hypercube(0); }) == ErrorCode::InvalidParameter);
  const std::vector<int> zero{0};
  CHECK(code_of([&] { circulant(6, zero); }) == ErrorCode::InvalidParameter);
  const std::vector<int> repeated{1, 7};
  CHECK(code_of([&] { circulant(6, repeated); }) == ErrorCode::InvalidParameter);
  const std::vector<int> negated{1, 5};
  CHECK(circulant(6, negated).same_edge_set(cycle(6)));

  CHECK(generate({GeneratorKind::Cycle, {5}}).same_edge_set(cycle(5)));
  CHECK(code_of([] { generate({GeneratorKind::Petersen, {3}}); }) == ErrorCode::InvalidParameter);
  CHECK(parse_generator_kind("bipartite") == GeneratorKind::CompleteBipartite);
  CHECK_FALSE(parse_generator_kind("wheel").has_value());
}

TEST_CASE("every generator output satisfies 2m = rn") {
  const std::vector<int> s12{1, 2}, s13{1, 3}, s4{1, 2, 4};
  std::vector<Graph> graphs{petersen(), circulant(8, s12), circulant(10, s13), circulant(9, s4)};
  for (int k = 3; k <= 9; ++k) graphs.push_back(cycle(k));
  for (int k = 1; k <= 7; ++k) graphs.push_back(complete(k));
  for (int a = 1; a <= 5; ++a) graphs.push_back(complete_bipartite(a));
  for (int d = 1; d <= 5; ++d) graphs.push_back(hypercube(d));
  for (const Graph& g : graphs) {
    const auto w = regularity(g);
    REQUIRE(w.regular());
    CHECK(2 * g.edge_count() == *w.degree * g.vertex_count());
    const auto d = oracle::degrees(g);
    CHECK(std::all_of(d.begin(), d.end(), [&](int x) { return x == *w.degree; }));
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete(4)).edge_count() == 0);

  const Graph c5c = complement(cycle(5));
  CHECK(c5c.edge_count() == 5);
  CHECK(regularity(c5c).degree == 2);

  const Graph c6c = complement(cycle(6));
  CHECK(c6c.edge_count() == 9);
  CHECK(regularity(c6c).degree == 3);
  // brute-force pair enumeration
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) CHECK(c6c.has_edge(u, v) != cycle(6).has_edge(u, v));
  }
  // lexicographic order
  const auto& e = c6c.edges();
  CHECK(std::is_sorted(e.begin(), e.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  }));

  for (const Graph& g : {petersen(), cycle(7), hypercube(3), path3()}) {
    CHECK(complement(complement(g)).same_edge_set(g));
  }
}

TEST_CASE("line graph") {
  CHECK(line_graph(complete(3)).same_edge_set(complete(3)));

  const Graph l6 = line_graph(cycle(6));
  CHECK(l6.edge_count() == 6);
  CHECK(regularity(l6).degree == 2);

  const Graph lp = line_graph(petersen());
  CHECK(lp.vertex_count() == 15);
  CHECK(regularity(lp).degree == 4);
  // brute-force shared-endpoint test
  const Graph pg = petersen();
  const auto& pe = pg.edges();
  for (int i = 0; i < 15; ++i) {
    for (int j = i + 1; j < 15; ++j) {
      const bool share = pe[i].u == pe[j].u || pe[i].u == pe[j].v || pe[i].v == pe[j].u || pe[i].v == pe[j].v;
      CHECK(lp.has_edge(i, j) == share);
    }
  }

  for (const Graph& g : {complete(5), hypercube(4), complete_bipartite(3)}) {
    CHECK(regularity(line_graph(g)).degree == 2 * *regularity(g).degree - 2);
  }
  CHECK(code_of([] { line_graph(empty_graph(3)); }) == ErrorCode::EmptyEdgeSet);
}

TEST_CASE("regularity") {
  CHECK(regularity(cycle(7)).degree == 2);
  CHECK_FALSE(regularity(path3()));
  CHECK(regularity(hypercube(3)).degree == 3);
  CHECK(regularity(empty_graph(4)).degree == 0);
}

TEST_CASE("edge-list round trip and parse errors") {
  std::ostringstream out;
  write_edge_list(out, petersen());
  std::istringstream in(out.str());
  const Graph back = read_edge_list(in);
  CHECK(back == petersen());

  std::istringstream blank("\n3 2\n\n0 1\n1 2\n\n");
  CHECK(read_edge_list(blank).edge_count() == 2);

  auto parse = [](const std::string& text) {
    return code_of([&] {
      std::istringstream s(text);
      read_edge_list(s);
    });
  };
  CHECK(parse("") == ErrorCode::ParseError);
  CHECK(parse("3") == ErrorCode::ParseError);
  CHECK(parse("3 2\n0 1\n") == ErrorCode::ParseError);
  CHECK(parse("3 1\n0 x\n") == ErrorCode::ParseError);
  CHECK(parse("3 1\n0 1 2\n") == ErrorCode::ParseError);
  CHECK(parse("3 1\n0 1\n1 2\n") == ErrorCode::ParseError);
  CHECK(parse("3 1\n0 5\n") == ErrorCode::IndexOutOfRange);
  CHECK(parse("3 2\n0 1\n1 0\n") == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { read_edge_list_file("/nonexistent/graph.g"); }) == ErrorCode::ParseError);
}
