#pragma once

// Test-side reference computations, deliberately sharing no algorithm with
// the library: determinants by Laplace expansion over polynomial entries.

#include <bit>
#include <cstdint>
#include <vector>

#include "xyzq/graph.hpp"
#include "xyzq/matrix.hpp"
#include "xyzq/poly.hpp"

namespace oracle {

using xyzq::Int;
using xyzq::IntMatrix;
using xyzq::IntPoly;

using PolyMatrix = std::vector<std::vector<IntPoly>>;

// Laplace expansion along successive rows, memoized on the set of used
// columns. Fine up to ~14x14.
inline IntPoly laplace_det(const PolyMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return IntPoly(1);
  std::vector<IntPoly> memo(std::size_t{1} << k);
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  memo[full] = IntPoly(1);
  // Fill masks in decreasing popcount so dependencies are ready.
  for (int used = static_cast<int>(k) - 1; used >= 0; --used) {
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (std::popcount(mask) != used) continue;
      IntPoly total;
      int free_before = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask & (1u << c)) continue;
        const IntPoly& entry = m[used][c];
        if (!entry.is_zero()) {
          IntPoly term = entry * memo[mask | (1u << c)];
          if (free_before % 2) total -= term;
          else total += term;
        }
        ++free_before;
      }
      memo[mask] = total;
    }
  }
  return memo[0];
}

// det(λI - M) by cofactor expansion.
inline IntPoly charpoly(const IntMatrix& m) {
  const std::size_t k = m.rows();
  PolyMatrix pm(k, std::vector<IntPoly>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      pm[i][j] = IntPoly(Int(-m(i, j)));
      if (i == j) pm[i][j] += IntPoly::x();
    }
  }
  return laplace_det(pm);
}

inline IntMatrix companion(const IntPoly& p) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  IntMatrix c(d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(i);
  return c;
}

// Π g(λ, α) over roots α of monic p, as det g(λ, C) with C the companion
// matrix of p (eigenvalues of g(λ, C) are g(λ, α)).
inline IntPoly eig_product(const IntPoly& p, const xyzq::BiPoly& g) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  if (d == 0) return IntPoly(1);
  const IntMatrix c = companion(p);
  PolyMatrix pm(d, std::vector<IntPoly>(d));
  IntMatrix cpow = IntMatrix::identity(d);
  for (int j = 0; j <= g.deg_q(); ++j) {
    // coefficient of q^j as a polynomial in λ
    std::vector<Int> col(static_cast<std::size_t>(g.deg_x() + 1));
    for (int i = 0; i <= g.deg_x(); ++i) col[i] = g.coeff(i, j);
    const IntPoly cj(col);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        if (cpow(a, b) != 0) pm[a][b] += cj * IntPoly(cpow(a, b));
      }
    }
    cpow = cpow * c;
  }
  return laplace_det(pm);
}

// Degree of each vertex by scanning the edge list.
inline std::vector<int> degrees(const xyzq::Graph& g) {
  std::vector<int> d(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

}  // namespace oracle
