#include "xyzq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "xyzq/formulas.hpp"
#include "xyzq/graph.hpp"
#include "xyzq/matrix.hpp"
#include "xyzq/poly.hpp"
#include "xyzq/transform.hpp"
#include "xyzq/verify.hpp"

namespace xyzq {

namespace {

// Thrown inside a subcommand to leave with a specific exit code.
struct Exit {
  int code;
};

[[noreturn]] void fail(std::ostream& err, int code, const std::string& msg) {
  err << "error: " << msg << "\n";
  throw Exit{code};
}

Graph load(const std::string& path, std::ostream& err) {
  try {
    return read_edge_list_file(path);
  } catch (const Error& e) {
    fail(err, kExitUsage, path + ": " + e.what());
  }
}

int require_regular(const Graph& g, std::ostream& err) {
  const RegularityWitness w = regularity(g);
  if (!w) fail(err, kExitIrregular, "input graph is not regular");
  return *w.degree;
}

XyzCase parse_case(const std::string& text, std::ostream& err) {
  const auto c = XyzCase::parse(text);
  if (!c) fail(err, kExitUsage, "bad case '" + text + "' (expected three of 0 1 + -)");
  return *c;
}

std::string coeff_line(const IntPoly& p) {
  std::string line;
  for (const auto& c : to_decimal_strings(p)) {
    if (!line.empty()) line += ' ';
    line += c;
  }
  return line;
}

void write_graph(const Graph& g, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    write_edge_list(out, g);
    return;
  }
  std::ofstream file(path);
  if (!file) fail(err, kExitUsage, "cannot write " + path);
  write_edge_list(file, g);
}

struct Options {
  std::string kind;
  std::vector<int> params;
  std::string input;
  std::string out_path;
  std::string xyz;
  std::string matrix = "Q";
  bool all = false;
  std::string report;
  unsigned threads = 0;
};

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const auto kind = parse_generator_kind(o.kind);
  if (!kind) fail(err, kExitUsage, "unknown generator '" + o.kind + "'");
  try {
    write_graph(generate({*kind, o.params}), o.out_path, out, err);
  } catch (const Error& e) {
    fail(err, kExitUsage, e.what());
  }
  return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  const XyzCase c = parse_case(o.xyz, err);
  const Graph g = load(o.input, err);
  require_regular(g, err);
  try {
    write_graph(xyz_transform(g, c), o.out_path, out, err);
  } catch (const Error& e) {
    fail(err, kExitUsage, e.what());
  }
  return kExitOk;
}

int cmd_charpoly(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load(o.input, err);
  const IntMatrix mat = o.matrix == "A" ? adjacency(g) : o.matrix == "L" ? laplacian(g) : signless_laplacian(g);
  out << coeff_line(charpoly(mat)) << "\n";
  return kExitOk;
}

int cmd_formula(const Options& o, std::ostream& out, std::ostream& err) {
  const XyzCase c = parse_case(o.xyz, err);
  const Graph g = load(o.input, err);
  const int r = require_regular(g, err);
  const Params p{g.vertex_count(), g.edge_count(), r};
  const FormulaDescriptor& d = descriptor_for(c);
  const IntPoly f = charpoly(signless_laplacian(g));
  try {
    const IntPoly result = formula_charpoly(d, p, f);
    out << coeff_line(result) << "\n";
    out << "f(λ, G^" << c.to_string() << ") = " << render_instance(d.body, p, f) << "\n";
    out << "  = " << result.pretty() << "\n";
  } catch (const Error& e) {
    fail(err, kExitFormula, e.what());
  }
  if (d.status == DescriptorStatus::Corrected) err << "note: case " << c.to_string() << " uses a corrected form\n";
  return kExitOk;
}

void print_result(const VerificationResult& res, std::ostream& out) {
  out << (res.outcome == Outcome::Match ? "PASS " : "FAIL ") << res.xyz.to_string();
  if (res.outcome == Outcome::Mismatch) out << "  diff: " << coeff_line(res.diff);
  if (res.outcome == Outcome::Error) out << "  error: " << res.error;
  out << "\n";
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.all == !o.xyz.empty()) fail(err, kExitUsage, "verify needs exactly one of --case or --all");
  std::vector<XyzCase> cases;
  if (o.all) cases.assign(list_cases().begin(), list_cases().end());
  else cases.push_back(parse_case(o.xyz, err));
  const Graph g = load(o.input, err);
  require_regular(g, err);
  if (g.edge_count() == 0) fail(err, kExitUsage, "graph has no edges");

  const std::vector<NamedGraph> graphs{{o.input, g}};
  const CorpusReport report = run_corpus(graphs, cases, o.threads);
  for (const auto& res : report.entries) print_result(res, out);
  return report.all_matched() ? kExitOk : kExitMismatch;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<NamedGraph> graphs = default_corpus();
  const CorpusReport report = run_corpus(graphs, list_cases(), o.threads);
  if (!o.report.empty()) {
    std::ofstream file(o.report);
    if (!file) fail(err, kExitUsage, "cannot write " + o.report);
    file << report.to_json().dump(2) << "\n";
  }
  int matched = 0;
  for (const auto& t : report.tallies) {
    matched += t.matched;
    out << t.xyz.to_string() << ' ' << to_string(t.status) << ' ' << t.matched << '/' << t.total << "\n";
  }
  out << "total " << matched << '/' << report.entries.size() << "\n";
  for (const auto* f : report.failures()) {
    err << "FAIL " << f->graph << ' ' << f->xyz.to_string() << ' ' << to_string(f->outcome) << "\n";
  }
  err << "runtime " << report.runtime_seconds << "s\n";
  return report.all_matched() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signless Laplacian spectra of xyz-transformations"};
  app.name("xyzq");
  app.require_subcommand(1, 1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("kind", o.kind, "cycle | complete | bipartite | petersen | hypercube | circulant")->required();
  gen->add_option("params", o.params, "Generator parameters (circulant: k s1 s2 ...)");
  gen->add_option("--out", o.out_path, "Output file (default stdout)");

  auto* transform = app.add_subcommand("transform", "Write the edge list of G^xyz");
  transform->add_option("input", o.input, "Edge-list file")->required();
  transform->add_option("--case", o.xyz, "Case string, e.g. +-0 (use --case=--0 for leading '--')")->required();
  transform->add_option("--out", o.out_path, "Output file (default stdout)");

  auto* cp = app.add_subcommand("charpoly", "Print the characteristic polynomial, ascending");
  cp->add_option("input", o.input, "Edge-list file")->required();
  cp->add_option("--matrix", o.matrix, "A, L or Q")->check(CLI::IsMember({"A", "L", "Q"}));

  auto* formula = app.add_subcommand("formula", "Evaluate the closed form for one case");
  formula->add_option("input", o.input, "Edge-list file")->required();
  formula->add_option("--case", o.xyz, "Case string")->required();

  auto* verify = app.add_subcommand("verify", "Compare closed forms against direct computation");
  verify->add_option("input", o.input, "Edge-list file")->required();
  verify->add_option("--case", o.xyz, "Case string");
  verify->add_flag("--all", o.all, "All 64 cases");
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* corpus = app.add_subcommand("corpus", "Verify every case on the built-in corpus");
  corpus->add_option("--report", o.report, "JSON report file");
  corpus->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out, err);
    if (*transform) return cmd_transform(o, out, err);
    if (*cp) return cmd_charpoly(o, out, err);
    if (*formula) return cmd_formula(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    return cmd_corpus(o, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace xyzq
