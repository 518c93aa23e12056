#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xyzq/core.hpp"
#include "xyzq/graph.hpp"

namespace xyzq {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t k);
  static IntMatrix all_ones(std::size_t p, std::size_t q);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  Int trace() const;
  bool is_symmetric() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& s, IntMatrix a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix adjacency(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
IntMatrix laplacian(const Graph& g);
IntMatrix signless_laplacian(const Graph& g);
/// n x m; column j has ones at the two endpoints of edge j.
IntMatrix incidence(const Graph& g);

/// Fraction-free (Bareiss) determinant with row pivoting. Throws
/// Error{NotSquare}.
Int determinant(IntMatrix m);

}  // namespace xyzq
