#include "xyzq/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace xyzq {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(const Int& constant) {
  if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }

IntPoly IntPoly::from_coeffs(std::initializer_list<long> ascending) {
  std::vector<Int> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::linear(const Int& a, const Int& b) { return IntPoly(std::vector<Int>{b, a}); }

const Int& IntPoly::leading() const {
  static const Int zero = 0;
  return c_.empty() ? zero : c_.back();
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::eval(const Int& at) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + Rational(*it);
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (Int& x : r.c_) x = -x;
  return r;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ' ';
    out += c_[i].get_str();
  }
  return out;
}

std::string IntPoly::pretty(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    const Int mag = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = 1;
  IntPoly b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) {
    throw Error(ErrorCode::NotDivisible, "(" + a.pretty() + ") / (" + b.pretty() + "): degree too small");
  }
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> quot(static_cast<std::size_t>(da - db + 1));
  const Int& lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Int& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorCode::NotDivisible, "(" + a.pretty() + ") / (" + b.pretty() + "): non-integral quotient");
    }
    Int qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j) rem[k + j] -= qk * b.coeffs()[j];
    quot[k] = std::move(qk);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Int& x) { return x != 0; })) {
    throw Error(ErrorCode::NotDivisible, "(" + a.pretty() + ") / (" + b.pretty() + "): nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

std::vector<std::string> to_decimal_strings(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPoly from_decimal_strings(const std::vector<std::string>& coeffs) {
  std::vector<Int> c;
  for (const std::string& s : coeffs) {
    Int v;
    if (v.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad coefficient '" + s + "'");
    c.push_back(std::move(v));
  }
  return IntPoly(std::move(c));
}

IntPoly compose_linear(const IntPoly& f, const Int& a, const Int& b) {
  const IntPoly inner = IntPoly::linear(a, b);
  IntPoly acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * inner + IntPoly(f.coeffs()[i]);
  return acc;
}

IntPoly charpoly(const IntMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, "charpoly of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Descending coefficients of det(xI - S) for the trailing principal
  // submatrix S, grown one row/column at a time from the bottom-right.
  std::vector<Int> vec{1, -m(n - 1, n - 1)};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t s = n - k;  // size of the current submatrix
    // diags = [1, -a, -R C, -R A C, ..., -R A^{s-2} C]
    std::vector<Int> diags;
    diags.reserve(s + 1);
    diags.emplace_back(1);
    diags.emplace_back(-m(k, k));
    std::vector<Int> col(s - 1);  // A^i C
    for (std::size_t i = 0; i + 1 < s; ++i) col[i] = m(k + 1 + i, k);
    for (std::size_t power = 0; power + 1 < s; ++power) {
      Int dot = 0;
      for (std::size_t j = 0; j + 1 < s; ++j) dot += m(k, k + 1 + j) * col[j];
      diags.push_back(-dot);
      if (power + 2 < s) {
        std::vector<Int> next(s - 1);
        for (std::size_t i = 0; i + 1 < s; ++i) {
          for (std::size_t j = 0; j + 1 < s; ++j) {
            const Int& a = m(k + 1 + i, k + 1 + j);
            if (a != 0) next[i] += a * col[j];
          }
        }
        col = std::move(next);
      }
    }
    // vec (length s) -> Toeplitz(diags) * vec (length s + 1)
    std::vector<Int> out(s + 1);
    for (std::size_t i = 0; i <= s; ++i) {
      for (std::size_t j = 0; j < s && j <= i; ++j) out[i] += diags[i - j] * vec[j];
    }
    vec = std::move(out);
  }
  std::reverse(vec.begin(), vec.end());
  return IntPoly(std::move(vec));
}

IntPoly reduced_qpoly(const IntPoly& f, long r) {
  if (!f.is_monic()) throw Error(ErrorCode::NotDivisible, "reduced_qpoly needs a monic polynomial");
  return exact_div(f, IntPoly::monic_linear(Int(2 * r)));
}

IntPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::DimensionMismatch, "interpolate: xs/ys length differ");
  const std::size_t n = xs.size();
  if (n == 0) return {};
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const Int span = xs[i] - xs[i - j];
      if (span == 0) throw Error(ErrorCode::InvalidParameter, "interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / Rational(span);
    }
  }
  // Newton form -> monomial basis
  std::vector<Rational> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * Rational(xs[k]);
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  std::vector<Int> out;
  out.reserve(acc.size());
  for (Rational& c : acc) {
    c.canonicalize();
    if (c.get_den() != 1) throw Error(ErrorCode::NotDivisible, "interpolant has non-integer coefficient");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Int& constant) {
  if (constant != 0) grid_ = {{constant}};
}

BiPoly::BiPoly(std::vector<std::vector<Int>> grid) : grid_(std::move(grid)) { trim(); }

BiPoly BiPoly::x() { return BiPoly(std::vector<std::vector<Int>>{{0}, {1}}); }

BiPoly BiPoly::q() { return BiPoly(std::vector<std::vector<Int>>{{0, 1}}); }

BiPoly BiPoly::affine(const Int& a, const Int& b, const Int& c) {
  return BiPoly(std::vector<std::vector<Int>>{{c, b}, {a}});
}

void BiPoly::trim() {
  for (auto& row : grid_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

int BiPoly::deg_q() const {
  int d = -1;
  for (const auto& row : grid_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Int BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= grid_.size() || j >= grid_[i].size()) return 0;
  return grid_[i][j];
}

IntPoly BiPoly::at_x(const Int& at) const {
  std::vector<Int> out(static_cast<std::size_t>(std::max(deg_q() + 1, 0)));
  Int power = 1;
  for (const auto& row : grid_) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j] * power;
    power *= at;
  }
  return IntPoly(std::move(out));
}

IntPoly BiPoly::at_q(const Int& at) const {
  std::vector<Int> out(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) out[i] = IntPoly(grid_[i]).eval(at);
  return IntPoly(std::move(out));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.grid_.size() > grid_.size()) grid_.resize(o.grid_.size());
  for (std::size_t i = 0; i < o.grid_.size(); ++i) {
    auto& row = grid_[i];
    if (o.grid_[i].size() > row.size()) row.resize(o.grid_[i].size());
    for (std::size_t j = 0; j < o.grid_[i].size(); ++j) row[j] += o.grid_[i][j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.grid_.size() > grid_.size()) grid_.resize(o.grid_.size());
  for (std::size_t i = 0; i < o.grid_.size(); ++i) {
    auto& row = grid_[i];
    if (o.grid_[i].size() > row.size()) row.resize(o.grid_[i].size());
    for (std::size_t j = 0; j < o.grid_[i].size(); ++j) row[j] -= o.grid_[i][j];
  }
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::vector<Int>> g(a.grid_.size() + b.grid_.size() - 1,
                                  std::vector<Int>(static_cast<std::size_t>(a.deg_q() + b.deg_q() + 1)));
  for (std::size_t i1 = 0; i1 < a.grid_.size(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.grid_[i1].size(); ++j1) {
      if (a.grid_[i1][j1] == 0) continue;
      for (std::size_t i2 = 0; i2 < b.grid_.size(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.grid_[i2].size(); ++j2) {
          g[i1 + i2][j1 + j2] += a.grid_[i1][j1] * b.grid_[i2][j2];
        }
      }
    }
  }
  return BiPoly(std::move(g));
}

// ---------------------------------------------------------------- resultants

Int resultant(const IntPoly& p, const IntPoly& h, int h_degree) {
  if (h_degree < std::max(h.degree(), 0)) {
    throw Error(ErrorCode::InvalidParameter, "resultant: formal degree below actual degree");
  }
  if (p.is_zero()) throw Error(ErrorCode::InvalidParameter, "resultant: zero polynomial");
  const auto d = static_cast<std::size_t>(p.degree());
  const auto e = static_cast<std::size_t>(h_degree);
  const std::size_t size = d + e;
  IntMatrix s(size, size);
  for (std::size_t row = 0; row < e; ++row) {
    for (std::size_t k = 0; k <= d; ++k) s(row, row + k) = p.coeff(d - k);
  }
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t k = 0; k <= e; ++k) s(e + row, row + k) = h.coeff(e - k);
  }
  return determinant(std::move(s));
}

IntPoly eig_product(const IntPoly& p, const BiPoly& g) {
  if (!p.is_monic()) throw Error(ErrorCode::InvalidParameter, "eig_product needs a monic polynomial");
  if (g.is_zero()) throw Error(ErrorCode::InvalidParameter, "eig_product needs a nonzero factor");
  const int d = p.degree();
  if (d == 0) return 1;
  const int e = g.deg_q();
  const int bound = g.deg_x() * d;
  std::vector<Int> xs, ys;
  xs.reserve(bound + 1);
  ys.reserve(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    xs.emplace_back(k);
    ys.push_back(resultant(p, g.at_x(Int(k)), e));
  }
  return interpolate(xs, ys);
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!den_.is_monic()) throw Error(ErrorCode::InvalidParameter, "RatPoly denominator must be monic");
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

}  // namespace xyzq
