#include "xyzq/formula_expr.hpp"

#include <algorithm>
#include <utility>

namespace xyzq {

ParamExpr::ParamExpr(long long constant) {
  if (constant != 0) terms_[{0, 0, 0}] = constant;
}

ParamExpr ParamExpr::var(Param p) {
  ParamExpr e;
  Monomial mono{0, 0, 0};
  mono[static_cast<std::size_t>(p)] = 1;
  e.terms_[mono] = 1;
  return e;
}

bool ParamExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
}

Int ParamExpr::eval(const Params& p) const {
  const std::array<Int, 3> vals{Int(static_cast<long>(p.n)), Int(static_cast<long>(p.m)),
                                Int(static_cast<long>(p.r))};
  Int total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Int t = static_cast<long>(coeff);
    for (std::size_t v = 0; v < 3; ++v) {
      for (int k = 0; k < mono[v]; ++k) t *= vals[v];
    }
    total += t;
  }
  return total;
}

std::string ParamExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, long long>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  static constexpr std::array<char, 3> names{'n', 'm', 'r'};
  std::string out;
  for (const auto& [mono, coeff] : order) {
    const long long mag = coeff < 0 ? -coeff : coeff;
    out += coeff < 0 ? "-" : (out.empty() ? "" : "+");
    const bool constant = mono == Monomial{0, 0, 0};
    if (mag != 1 || constant) out += std::to_string(mag);
    for (std::size_t v = 0; v < 3; ++v) {
      if (mono[v] == 0) continue;
      out += names[v];
      if (mono[v] > 1) out += "^" + std::to_string(mono[v]);
    }
  }
  return out;
}

ParamExpr operator+(const ParamExpr& a, const ParamExpr& b) {
  ParamExpr out = a;
  for (const auto& [mono, coeff] : b.terms_) {
    if ((out.terms_[mono] += coeff) == 0) out.terms_.erase(mono);
  }
  return out;
}

ParamExpr operator-(const ParamExpr& a, const ParamExpr& b) {
  ParamExpr out = a;
  for (const auto& [mono, coeff] : b.terms_) {
    if ((out.terms_[mono] -= coeff) == 0) out.terms_.erase(mono);
  }
  return out;
}

ParamExpr operator*(const ParamExpr& a, const ParamExpr& b) {
  ParamExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const ParamExpr::Monomial mono{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      if ((out.terms_[mono] += ca * cb) == 0) out.terms_.erase(mono);
    }
  }
  return out;
}

// ---------------------------------------------------------------- FactorSum

FactorSum operator*(const LinearForm& a, const LinearForm& b) {
  FactorSum s;
  s.terms.push_back({1, {a, b}});
  return s;
}

FactorSum operator*(FactorSum a, const LinearForm& b) {
  for (FactorTerm& t : a.terms) t.factors.push_back(b);
  return a;
}

FactorSum operator*(const ParamExpr& k, const LinearForm& a) {
  FactorSum s;
  s.terms.push_back({k, {a}});
  return s;
}

FactorSum operator+(FactorSum a, const FactorSum& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

FactorSum operator-(FactorSum a, const FactorSum& b) {
  for (FactorTerm t : b.terms) {
    t.coeff = -t.coeff;
    a.terms.push_back(std::move(t));
  }
  return a;
}

FactorSum operator+(FactorSum a, const ParamExpr& k) { return std::move(a) + FactorSum(k); }

FactorSum operator-(FactorSum a, const ParamExpr& k) { return std::move(a) - FactorSum(k); }

bool FactorSum::mentions_q() const {
  return std::any_of(terms.begin(), terms.end(), [](const FactorTerm& t) {
    return std::any_of(t.factors.begin(), t.factors.end(), [](const LinearForm& f) { return f.q != 0; });
  });
}

BiPoly FactorSum::instantiate(const Params& p) const {
  BiPoly total;
  for (const FactorTerm& t : terms) {
    BiPoly prod = t.coeff.eval(p);
    for (const LinearForm& f : t.factors) prod = prod * BiPoly::affine(f.lam, f.q, f.c.eval(p));
    total += prod;
  }
  return total;
}

namespace {

std::string constant_text(const ParamExpr& c, const Params* params) {
  return params ? c.eval(*params).get_str() : c.to_string();
}

bool is_pure_lambda(const LinearForm& f) { return f.lam == 1 && f.q == 0 && f.c.is_zero(); }
bool is_pure_q(const LinearForm& f) { return f.lam == 0 && f.q == 1 && f.c.is_zero(); }

// Appends "+expr" / "-expr" for a constant, flipping the sign of a leading
// minus so "λ" and "-n+2" read as "λ-n+2".
void append_signed(std::string& out, const std::string& text) {
  if (text == "0") return;
  if (out.empty()) out += text;
  else if (text.front() == '-') out += text;
  else out += "+" + text;
}

std::string factor_text(const LinearForm& f, const Params* params) {
  if (is_pure_lambda(f)) return "λ";
  if (is_pure_q(f)) return "q";
  return "(" + render(f, params) + ")";
}

}  // namespace

std::string render(const LinearForm& f, const Params* params) {
  std::string out;
  auto var = [&](int coeff, const char* name) {
    if (coeff == 0) return;
    std::string t = (coeff == 1 ? "" : coeff == -1 ? "-" : std::to_string(coeff)) + name;
    append_signed(out, t);
  };
  var(f.lam, "λ");
  append_signed(out, constant_text(f.c, params));
  var(f.q, "q");
  return out.empty() ? "0" : out;
}

std::string FactorSum::render(const Params* params) const {
  std::string out;
  for (const FactorTerm& t : terms) {
    // group equal adjacent factors into powers
    std::string body;
    for (std::size_t i = 0; i < t.factors.size();) {
      std::size_t j = i;
      while (j < t.factors.size() && t.factors[j] == t.factors[i]) ++j;
      body += factor_text(t.factors[i], params);
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }
    const std::string coeff = constant_text(t.coeff, params);
    std::string term;
    if (body.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = body;
    } else if (coeff == "-1") {
      term = "-" + body;
    } else if (params || t.coeff.is_constant()) {
      term = coeff + body;
    } else {
      term = "(" + coeff + ")" + body;
    }
    append_signed(out, term);
  }
  return out.empty() ? "0" : out;
}

}  // namespace xyzq
