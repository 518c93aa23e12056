#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xyzq/core.hpp"
#include "xyzq/matrix.hpp"

namespace xyzq {

/// Dense univariate polynomial over Z, ascending coefficients, normalized so
/// the leading coefficient is nonzero (the zero polynomial has no
/// coefficients and degree -1).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(const Int& constant);  // NOLINT(google-explicit-constructor)
  IntPoly(long constant) : IntPoly(Int(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit IntPoly(std::vector<Int> ascending);

  static IntPoly from_coeffs(std::initializer_list<long> ascending);
  static IntPoly x() { return from_coeffs({0, 1}); }
  /// a*x + b
  static IntPoly linear(const Int& a, const Int& b);
  /// (x - root)
  static IntPoly monic_linear(const Int& root) { return linear(1, -root); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const Int& leading() const;

  Int eval(const Int& at) const;
  Rational eval(const Rational& at) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Ascending decimal coefficients separated by single spaces; "0" for the
  /// zero polynomial.
  std::string to_string() const;
  /// Conventional descending rendering in the given variable, e.g. "λ^2-4λ+4".
  std::string pretty(const std::string& var = "λ") const;

 private:
  void normalize();
  std::vector<Int> c_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Returns q with a = b*q over Z. Throws Error{NotDivisible} when b is zero,
/// when the remainder is nonzero, or when q would need non-integer
/// coefficients.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

inline bool is_equal(const IntPoly& a, const IntPoly& b) { return a == b; }
inline IntPoly diff(const IntPoly& a, const IntPoly& b) { return a - b; }

std::vector<std::string> to_decimal_strings(const IntPoly& p);
IntPoly from_decimal_strings(const std::vector<std::string>& coeffs);

/// f(a*x + b) expanded exactly.
IntPoly compose_linear(const IntPoly& f, const Int& a, const Int& b);

/// det(x*I - m), computed with the division-free Berkowitz recurrence.
/// Throws Error{NotSquare}.
IntPoly charpoly(const IntMatrix& m);

/// f / (x - 2r): strips the known top eigenvalue 2r of an r-regular graph's
/// signless Laplacian. Throws Error{NotDivisible} when f is not monic or
/// 2r is not a root.
IntPoly reduced_qpoly(const IntPoly& f, long r);

/// Unique polynomial of degree <= xs.size()-1 through (xs[k], ys[k]),
/// distinct integer abscissae. Throws Error{NotDivisible} if the
/// interpolant has a non-integer coefficient.
IntPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys);

/// Polynomial in two variables: sum of c[i][j] * x^i * q^j, where x is the
/// spectral variable (λ) and q stands for an eigenvalue.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Int& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(long constant) : BiPoly(Int(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit BiPoly(std::vector<std::vector<Int>> grid);

  static BiPoly x();
  static BiPoly q();
  /// a*x + b*q + c
  static BiPoly affine(const Int& a, const Int& b, const Int& c);

  int deg_x() const { return static_cast<int>(grid_.size()) - 1; }
  int deg_q() const;
  bool is_zero() const { return grid_.empty(); }
  Int coeff(std::size_t i, std::size_t j) const;
  const std::vector<std::vector<Int>>& grid() const { return grid_; }

  /// Substitute x = at; result is a polynomial in q.
  IntPoly at_x(const Int& at) const;
  /// Substitute q = at; result is a polynomial in x.
  IntPoly at_q(const Int& at) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void trim();
  std::vector<std::vector<Int>> grid_;  // grid_[i][j], rows may differ in length
};

/// Res(p, h) as the determinant of the Sylvester matrix, with h taken at
/// formal degree h_degree (>= h.degree()). For p of degree d with leading
/// coefficient a, this equals a^h_degree * prod over roots α of p of h(α).
Int resultant(const IntPoly& p, const IntPoly& h, int h_degree);

/// prod over the roots α of the monic p (with multiplicity) of g(λ, α), as a
/// polynomial in λ. Evaluates the resultant in q at λ = 0, 1, ...,
/// deg_x(g)*deg(p) and interpolates.
IntPoly eig_product(const IntPoly& p, const BiPoly& g);

/// numerator / denominator with a monic denominator; to_poly() performs the
/// final exact division.
class RatPoly {
 public:
  RatPoly() : num_(0), den_(1) {}
  RatPoly(IntPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatPoly(IntPoly num, IntPoly den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  RatPoly& operator*=(const RatPoly& o);
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }

  /// Throws Error{NotDivisible} when the quotient is not a polynomial.
  IntPoly to_poly() const { return exact_div(num_, den_); }

 private:
  IntPoly num_;
  IntPoly den_;
};

}  // namespace xyzq
