#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "xyzq/formula_expr.hpp"
#include "xyzq/poly.hpp"
#include "xyzq/transform.hpp"

namespace xyzq {

/// (λ - root)^exponent; negative exponents go to the denominator.
struct LinearFactor {
  ParamExpr root;
  ParamExpr exponent;
};

/// f(scale*λ + shift, G) where f is the signless Laplacian characteristic
/// polynomial of the base graph.
struct ComposedTerm {
  int scale = 1;
  ParamExpr shift;
};

/// One closed form for f(λ, G^{xyz}) of an r-regular G:
///
///   (-1)^sign_exponent * prefactor(λ) * Π (λ - root)^exponent
///     * Π_{i=1}^{n-1} eig_factor(λ, q_i) * Π f(scale*λ + shift, G)
///
/// where q_1..q_{n-1} are the Q-eigenvalues of G other than the top one 2r.
struct FormulaBody {
  ParamExpr sign_exponent;
  FactorSum prefactor = ParamExpr(1);
  std::vector<LinearFactor> linear_factors;
  std::optional<FactorSum> eig_factor;
  std::vector<ComposedTerm> composed;

  std::string render() const;
};

enum class DescriptorStatus { AsPublished, Corrected };

std::string_view to_string(DescriptorStatus s);

struct FormulaDescriptor {
  XyzCase xyz;
  FormulaBody body;
  DescriptorStatus status = DescriptorStatus::AsPublished;
  /// The published form, kept when `body` had to be corrected.
  std::optional<FormulaBody> published;
  std::string note;
};

/// All 64 descriptors in list_cases() order.
std::span<const FormulaDescriptor> all_descriptors();
const FormulaDescriptor& descriptor_for(XyzCase c);

/// Evaluates a body exactly. `f` is f(λ, G), monic of degree n with 2r as a
/// root. Throws Error{NotDivisible} when the rational expression is not a
/// polynomial and Error{DegreeMismatch} when the result is not of degree
/// n + m.
IntPoly evaluate(const FormulaBody& body, const Params& p, const IntPoly& f);

/// evaluate() on the descriptor's body after checking 2m = rn, m >= 1 and
/// that f is monic of degree n (Error{PreconditionViolated}). Error messages
/// carry the case string.
IntPoly formula_charpoly(const FormulaDescriptor& d, const Params& p, const IntPoly& f);

/// Factored rendering with the parameters substituted and the eigen-product
/// and composed terms expanded.
std::string render_instance(const FormulaBody& body, const Params& p, const IntPoly& f);

/// [{case, status, expression, published_expression?, note?}, ...]
nlohmann::json descriptors_json();

}  // namespace xyzq
