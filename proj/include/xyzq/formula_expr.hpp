#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "xyzq/core.hpp"
#include "xyzq/poly.hpp"

namespace xyzq {

/// Graph parameters a formula is instantiated with.
struct Params {
  long long n = 0;  // vertices
  long long m = 0;  // edges
  long long r = 0;  // degree
};

enum class Param { N, M, R };

/// Integer polynomial in the graph parameters n, m, r, kept in expanded
/// normal form. Evaluates to an integer for any integer (n, m, r).
class ParamExpr {
 public:
  ParamExpr() = default;
  ParamExpr(long long constant);  // NOLINT(google-explicit-constructor)
  static ParamExpr var(Param p);

  Int eval(const Params& p) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// e.g. "2n+m-2r-2"; "0" when zero.
  std::string to_string() const;

  friend ParamExpr operator+(const ParamExpr& a, const ParamExpr& b);
  friend ParamExpr operator-(const ParamExpr& a, const ParamExpr& b);
  friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b);
  friend ParamExpr operator-(const ParamExpr& a) { return ParamExpr(0) - a; }
  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;

 private:
  using Monomial = std::array<int, 3>;  // exponents of n, m, r
  std::map<Monomial, long long> terms_;
};

/// lam*λ + q*q + c, with integer lam, q and a parameter-valued constant.
struct LinearForm {
  int lam = 0;
  int q = 0;
  ParamExpr c;

  friend LinearForm operator+(LinearForm a, const ParamExpr& k) { a.c = a.c + k; return a; }
  friend LinearForm operator-(LinearForm a, const ParamExpr& k) { a.c = a.c - k; return a; }
  friend LinearForm operator+(const ParamExpr& k, LinearForm a) { a.c = k + a.c; return a; }
  friend LinearForm operator-(const ParamExpr& k, const LinearForm& a) {
    return LinearForm{-a.lam, -a.q, k - a.c};
  }
  friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    return LinearForm{a.lam + b.lam, a.q + b.q, a.c + b.c};
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    return LinearForm{a.lam - b.lam, a.q - b.q, a.c - b.c};
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// coeff * factors[0] * factors[1] * ...
struct FactorTerm {
  ParamExpr coeff = 1;
  std::vector<LinearForm> factors;
  friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

/// Sum of products of linear forms in (λ, q): the shape of every prefactor
/// and every per-eigenvalue factor, kept factored so it can be displayed the
/// way it is usually written.
struct FactorSum {
  std::vector<FactorTerm> terms;

  FactorSum() = default;
  FactorSum(const ParamExpr& constant) : terms{{constant, {}}} {}  // NOLINT(google-explicit-constructor)
  FactorSum(const LinearForm& f) : terms{{1, {f}}} {}  // NOLINT(google-explicit-constructor)

  bool mentions_q() const;
  /// Instantiates every parameter; x is λ.
  BiPoly instantiate(const Params& p) const;
  /// Symbolic rendering, or with numbers substituted when params is given.
  std::string render(const Params* params = nullptr) const;

  friend bool operator==(const FactorSum&, const FactorSum&) = default;
};

FactorSum operator*(const LinearForm& a, const LinearForm& b);
FactorSum operator*(FactorSum a, const LinearForm& b);
FactorSum operator*(const ParamExpr& k, const LinearForm& a);
FactorSum operator+(FactorSum a, const FactorSum& b);
FactorSum operator-(FactorSum a, const FactorSum& b);
FactorSum operator+(FactorSum a, const ParamExpr& k);
FactorSum operator-(FactorSum a, const ParamExpr& k);

std::string render(const LinearForm& f, const Params* params = nullptr);

namespace dsl {

inline const LinearForm L{1, 0, 0};  // λ
inline const LinearForm Q{0, 1, 0};  // q, a Q-eigenvalue other than 2r
inline const ParamExpr n = ParamExpr::var(Param::N);
inline const ParamExpr m = ParamExpr::var(Param::M);
inline const ParamExpr r = ParamExpr::var(Param::R);

}  // namespace dsl

}  // namespace xyzq
