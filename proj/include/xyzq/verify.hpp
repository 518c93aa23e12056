#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "xyzq/formulas.hpp"
#include "xyzq/graph.hpp"
#include "xyzq/poly.hpp"
#include "xyzq/transform.hpp"

namespace xyzq {

enum class Outcome { Match, Mismatch, Error };

std::string_view to_string(Outcome o);

struct VerificationResult {
  std::string graph;
  XyzCase xyz;
  Outcome outcome = Outcome::Error;
  IntPoly formula;
  IntPoly oracle;
  IntPoly diff;  // formula - oracle; zero iff outcome == Match
  std::string error;

  nlohmann::json to_json() const;
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

struct CaseTally {
  XyzCase xyz;
  DescriptorStatus status = DescriptorStatus::AsPublished;
  int matched = 0;
  int total = 0;
};

struct CorpusReport {
  std::vector<VerificationResult> entries;  // graph-major, then case order
  std::vector<CaseTally> tallies;           // one per requested case
  double runtime_seconds = 0.0;

  bool all_matched() const;
  std::vector<const VerificationResult*> failures() const;
  /// Keys are emitted in sorted order; runtime_seconds is the only
  /// run-dependent field.
  nlohmann::json to_json() const;
};

/// Oracle: charpoly(Q(G^{xyz})) by direct construction. Formula: the case's
/// descriptor evaluated on (n, m, r, f(λ, G)). Never throws; failures are
/// reported as Outcome::Error.
VerificationResult verify_case(const Graph& g, XyzCase c, const std::string& graph_id = "");

/// As verify_case, but evaluates an arbitrary body in place of the shipped
/// descriptor (used to re-check published forms).
VerificationResult verify_body(const Graph& g, XyzCase c, const FormulaBody& body, const std::string& graph_id = "");

/// Evaluates the full cross product, spread over `threads` workers (0 picks
/// the hardware concurrency); the entry order is independent of scheduling.
CorpusReport run_corpus(std::span<const NamedGraph> graphs, std::span<const XyzCase> cases, unsigned threads = 0);

/// C3..C8, K3..K6, K2,2..K4,4, Petersen, Q3, C8(1,2).
std::vector<NamedGraph> default_corpus();

/// (λ-n+2+2r) f(λ,G^c) == (-1)^n (λ-2n+2+2r) f(n-2-λ, G). Throws
/// Error{IrregularGraph} for irregular input.
bool check_complement_lemma(const Graph& g);

/// charpoly(Q(G^l)) == (λ-2r+4)^(m-n) f(λ-2r+4, G). Throws
/// Error{PreconditionViolated} when m < n and Error{IrregularGraph} for
/// irregular input.
bool check_line_graph_relation(const Graph& g);

/// P(Q, J_n) = Σ c[s][t] Q^s J_n^t, assembled with Q-powers to the left of
/// J-powers; x of the BiPoly stands for Q and q for J_n.
IntMatrix substitute_matrices(const BiPoly& p, const IntMatrix& qm, const IntMatrix& jm);

/// charpoly(P(Q, J_n)) == (λ - P(2r, n)) * Π_{i<n} (λ - P(q_i, 0)). Throws
/// Error{IrregularGraph} for irregular input.
bool check_eigen_lemma(const Graph& g, const BiPoly& p);

}  // namespace xyzq
