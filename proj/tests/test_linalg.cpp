#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xyzq/matrix.hpp"
#include "xyzq/verify.hpp"

using namespace xyzq;

TEST_CASE("graph matrices on small graphs") {
  const Graph k2 = complete(2);
  CHECK(signless_laplacian(k2) == IntMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(laplacian(k2) == IntMatrix::from_rows({{1, -1}, {-1, 1}}));

  const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(incidence(k3) == IntMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));

  const Graph c4 = cycle(4);
  CHECK(signless_laplacian(c4) == Int(2) * IntMatrix::identity(4) + adjacency(c4));
  CHECK(degree_matrix(c4) == Int(2) * IntMatrix::identity(4));
}

TEST_CASE("matrix operations") {
  const IntMatrix j = IntMatrix::all_ones(2, 2);
  CHECK(j * j == Int(2) * j);

  const IntMatrix m = IntMatrix::from_rows({{1, -2, 3}, {4, 5, -6}, {7, 8, 9}});
  CHECK(IntMatrix::identity(3) * m == m);
  CHECK(m * IntMatrix::identity(3) == m);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.transpose()(0, 1) == 4);
  CHECK(m.trace() == 15);
  CHECK_FALSE(m.is_symmetric());
  CHECK((m - m) == IntMatrix(3, 3));
  CHECK((m + m) == Int(2) * m);

  const IntMatrix r = IntMatrix::all_ones(2, 3);
  CHECK_THROWS_AS(r * r, Error);
  CHECK_THROWS_AS(r + IntMatrix(3, 2), Error);
  CHECK_THROWS_AS(r.trace(), Error);
  CHECK((r * r.transpose()) == Int(3) * IntMatrix::all_ones(2, 2));
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {1, 3}})) == 5);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(IntMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("incidence identities over the corpus") {
  for (const auto& [id, g] : default_corpus()) {
    CAPTURE(id);
    const IntMatrix r = incidence(g);
    CHECK(r * r.transpose() == signless_laplacian(g));
    CHECK(r.transpose() * r == adjacency(line_graph(g)) + Int(2) * IntMatrix::identity(g.edge_count()));
    CHECK(signless_laplacian(g) + laplacian(g) == Int(2) * degree_matrix(g));
    CHECK(signless_laplacian(g).trace() == 2 * g.edge_count());
    CHECK(signless_laplacian(g).is_symmetric());
    CHECK(laplacian(g).is_symmetric());
    CHECK(adjacency(g).is_symmetric());
    for (std::size_t j = 0; j < r.cols(); ++j) {
      Int col = 0;
      for (std::size_t i = 0; i < r.rows(); ++i) col += r(i, j);
      CHECK(col == 2);
    }
  }
}
