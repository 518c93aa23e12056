#include "xyzq/matrix.hpp"

#include <sstream>
#include <utility>

namespace xyzq {

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t p, std::size_t q) {
  IntMatrix m(p, q);
  for (Int& x : m.data_) x = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Int IntMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "trace of non-square matrix");
  Int t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  require_same_shape(*this, o, "sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream msg;
    msg << "mul: " << a.rows_ << "x" << a.cols_ << " by " << b.rows_ << "x" << b.cols_;
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntMatrix operator*(const Int& s, IntMatrix a) {
  for (Int& x : a.data_) x *= s;
  return a;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix adjacency(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix a(n, n);
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  const std::vector<int> deg = g.degrees();
  IntMatrix d(deg.size(), deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) d(i, i) = deg[i];
  return d;
}

IntMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency(g); }

IntMatrix signless_laplacian(const Graph& g) { return degree_matrix(g) + adjacency(g); }

IntMatrix incidence(const Graph& g) {
  IntMatrix r(static_cast<std::size_t>(g.vertex_count()), static_cast<std::size_t>(g.edge_count()));
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    r(g.edges()[j].u, j) = 1;
    r(g.edges()[j].v, j) = 1;
  }
  return r;
}

Int determinant(IntMatrix m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace xyzq
