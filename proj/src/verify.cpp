#include "xyzq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "xyzq/matrix.hpp"

namespace xyzq {

namespace {

int require_regular(const Graph& g) {
  const RegularityWitness w = regularity(g);
  if (!w) throw Error(ErrorCode::IrregularGraph, "graph is not regular");
  return *w.degree;
}

Params params_of(const Graph& g, int r) { return {g.vertex_count(), g.edge_count(), r}; }

nlohmann::json coeffs_json(const IntPoly& p) { return to_decimal_strings(p); }

template <typename Evaluate>
VerificationResult run_check(const Graph& g, XyzCase c, const std::string& id, Evaluate&& evaluate_formula) {
  VerificationResult res;
  res.graph = id;
  res.xyz = c;
  try {
    const int r = require_regular(g);
    if (r < 1 || g.edge_count() < 1) throw Error(ErrorCode::PreconditionViolated, "needs r >= 1 and m >= 1");
    res.oracle = charpoly(signless_laplacian(xyz_transform(g, c)));
    res.formula = evaluate_formula(params_of(g, r), charpoly(signless_laplacian(g)));
    res.diff = res.formula - res.oracle;
    res.outcome = res.diff.is_zero() ? Outcome::Match : Outcome::Mismatch;
  } catch (const std::exception& e) {
    res.outcome = Outcome::Error;
    res.error = e.what();
  }
  return res;
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Match: return "match";
    case Outcome::Mismatch: return "mismatch";
    case Outcome::Error: return "error";
  }
  return "error";
}

nlohmann::json VerificationResult::to_json() const {
  nlohmann::json j{{"graph", graph},
                   {"case", xyz.to_string()},
                   {"outcome", std::string(to_string(outcome))},
                   {"formula_coeffs", coeffs_json(formula)},
                   {"oracle_coeffs", coeffs_json(oracle)},
                   {"diff_coeffs", coeffs_json(diff)}};
  if (outcome == Outcome::Error) j["error"] = error;
  return j;
}

VerificationResult verify_case(const Graph& g, XyzCase c, const std::string& graph_id) {
  return run_check(g, c, graph_id, [&](const Params& p, const IntPoly& f) {
    return formula_charpoly(descriptor_for(c), p, f);
  });
}

VerificationResult verify_body(const Graph& g, XyzCase c, const FormulaBody& body, const std::string& graph_id) {
  return run_check(g, c, graph_id, [&](const Params& p, const IntPoly& f) { return evaluate(body, p, f); });
}

bool CorpusReport::all_matched() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.outcome == Outcome::Match; });
}

std::vector<const VerificationResult*> CorpusReport::failures() const {
  std::vector<const VerificationResult*> out;
  for (const auto& e : entries) {
    if (e.outcome != Outcome::Match) out.push_back(&e);
  }
  return out;
}

nlohmann::json CorpusReport::to_json() const {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) j["entries"].push_back(e.to_json());
  j["tallies"] = nlohmann::json::array();
  for (const auto& t : tallies) {
    j["tallies"].push_back({{"case", t.xyz.to_string()},
                            {"status", std::string(to_string(t.status))},
                            {"matched", t.matched},
                            {"total", t.total}});
  }
  j["failures"] = nlohmann::json::array();
  for (const auto* f : failures()) {
    j["failures"].push_back({{"graph", f->graph}, {"case", f->xyz.to_string()}, {"outcome", std::string(to_string(f->outcome))}});
  }
  j["descriptors"] = descriptors_json();
  j["all_matched"] = all_matched();
  j["runtime_seconds"] = runtime_seconds;
  return j;
}

CorpusReport run_corpus(std::span<const NamedGraph> graphs, std::span<const XyzCase> cases, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  CorpusReport report;
  const std::size_t total = graphs.size() * cases.size();
  report.entries.resize(total);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const NamedGraph& g = graphs[i / cases.size()];
      report.entries[i] = verify_case(g.graph, cases[i % cases.size()], g.id);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (const XyzCase& c : cases) {
    CaseTally t{c, descriptor_for(c).status, 0, 0};
    for (const auto& e : report.entries) {
      if (e.xyz != c) continue;
      ++t.total;
      if (e.outcome == Outcome::Match) ++t.matched;
    }
    report.tallies.push_back(t);
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<NamedGraph> default_corpus() {
  std::vector<NamedGraph> out;
  for (int k = 3; k <= 8; ++k) out.push_back({"C" + std::to_string(k), cycle(k)});
  for (int k = 3; k <= 6; ++k) out.push_back({"K" + std::to_string(k), complete(k)});
  for (int a = 2; a <= 4; ++a) {
    out.push_back({"K" + std::to_string(a) + "," + std::to_string(a), complete_bipartite(a)});
  }
  out.push_back({"Petersen", petersen()});
  out.push_back({"Q3", hypercube(3)});
  const std::vector<int> offsets{1, 2};
  out.push_back({"C8(1,2)", circulant(8, offsets)});
  return out;
}

bool check_complement_lemma(const Graph& g) {
  const long r = require_regular(g);
  const long n = g.vertex_count();
  const IntPoly f = charpoly(signless_laplacian(g));
  const IntPoly fc = charpoly(signless_laplacian(complement(g)));
  const IntPoly lhs = IntPoly::monic_linear(Int(n - 2 - 2 * r)) * fc;
  IntPoly rhs = IntPoly::monic_linear(Int(2 * n - 2 - 2 * r)) * compose_linear(f, -1, Int(n - 2));
  if (n % 2) rhs = -rhs;
  return lhs == rhs;
}

bool check_line_graph_relation(const Graph& g) {
  const long r = require_regular(g);
  const long n = g.vertex_count();
  const long m = g.edge_count();
  if (m < n) throw Error(ErrorCode::PreconditionViolated, "line-graph relation needs m >= n");
  const IntPoly f = charpoly(signless_laplacian(g));
  const IntPoly lhs = charpoly(signless_laplacian(line_graph(g)));
  const IntPoly rhs = pow(IntPoly::monic_linear(Int(2 * r - 4)), static_cast<unsigned>(m - n)) *
                      compose_linear(f, 1, Int(4 - 2 * r));
  return lhs == rhs;
}

IntMatrix substitute_matrices(const BiPoly& p, const IntMatrix& qm, const IntMatrix& jm) {
  if (!qm.is_square() || qm.rows() != jm.rows() || !jm.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "substitute_matrices needs equal square matrices");
  }
  const std::size_t k = qm.rows();
  IntMatrix total(k, k);
  IntMatrix qpow = IntMatrix::identity(k);
  for (int s = 0; s <= p.deg_x(); ++s) {
    IntMatrix jpow = IntMatrix::identity(k);
    for (int t = 0; t <= p.deg_q(); ++t) {
      const Int c = p.coeff(s, t);
      if (c != 0) total += c * (qpow * jpow);
      jpow = jpow * jm;
    }
    qpow = qpow * qm;
  }
  return total;
}

bool check_eigen_lemma(const Graph& g, const BiPoly& p) {
  const long r = require_regular(g);
  const long n = g.vertex_count();
  const IntMatrix qm = signless_laplacian(g);
  const IntPoly lhs = charpoly(substitute_matrices(p, qm, IntMatrix::all_ones(n, n)));

  // g(λ, q) = λ - P(q, 0)
  std::vector<std::vector<Int>> grid(2);
  grid[1] = {1};
  for (int s = 0; s <= p.deg_x(); ++s) {
    grid[0].resize(static_cast<std::size_t>(s) + 1);
    grid[0][s] -= p.coeff(s, 0);
  }
  const IntPoly top = IntPoly::monic_linear(p.at_q(Int(n)).eval(Int(2 * r)));
  const IntPoly rhs = top * eig_product(reduced_qpoly(charpoly(qm), r), BiPoly(std::move(grid)));
  return lhs == rhs;
}

}  // namespace xyzq
