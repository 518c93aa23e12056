#include "xyzq/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "xyzq/core.hpp"

namespace xyzq {

namespace {

std::pair<int, int> key(const Edge& e) { return std::minmax(e.u, e.v); }

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidParameter, "vertex count must be >= 1, got " + std::to_string(n));
  }
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const Edge& e : pairs) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge " + edge_text(e) + " outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "edge " + edge_text(e));
    }
    if (!seen.insert(key(e)).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text(e));
    }
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool Graph::has_edge(int u, int v) const {
  const std::pair<int, int> k{std::min(u, v), std::max(u, v)};
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return key(e) == k; });
}

bool Graph::same_edge_set(const Graph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  std::set<std::pair<int, int>> a, b;
  for (const Edge& e : edges_) a.insert(key(e));
  for (const Edge& e : other.edges_) b.insert(key(e));
  return a == b;
}

RegularityWitness regularity(const Graph& g) {
  const std::vector<int> deg = g.degrees();
  const int r = deg.front();
  if (!std::all_of(deg.begin(), deg.end(), [r](int d) { return d == r; })) return {};
  if (2 * g.edge_count() != r * g.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated, "handshake identity 2m = rn failed");
  }
  return {r};
}

Graph empty_graph(int n) { return Graph::from_edge_list(n, {}); }

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
  }
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!adj[u * n + v]) out.push_back({u, v});
    }
  }
  return Graph::from_edge_list(n, out);
}

Graph line_graph(const Graph& g) {
  const auto& e = g.edges();
  if (e.empty()) throw Error(ErrorCode::EmptyEdgeSet, "line graph needs at least one edge");
  std::vector<Edge> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    for (int j = i + 1; j < g.edge_count(); ++j) {
      if (e[i].shares_endpoint(e[j])) out.push_back({i, j});
    }
  }
  return Graph::from_edge_list(g.edge_count(), out);
}

Graph cycle(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs k >= 3, got " + std::to_string(k));
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  return Graph::from_edge_list(k, e);
}

Graph complete(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "complete graph needs k >= 1, got " + std::to_string(k));
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) e.push_back({i, j});
  }
  return Graph::from_edge_list(k, e);
}

Graph complete_bipartite(int a) {
  if (a < 1) throw Error(ErrorCode::InvalidParameter, "complete bipartite needs a >= 1, got " + std::to_string(a));
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) e.push_back({i, a + j});
  }
  return Graph::from_edge_list(2 * a, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
  return Graph::from_edge_list(10, e);
}

Graph hypercube(int d) {
  if (d < 1 || d > 16) throw Error(ErrorCode::InvalidParameter, "hypercube needs 1 <= d <= 16, got " + std::to_string(d));
  const int n = 1 << d;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) e.push_back({v, w});
    }
  }
  return Graph::from_edge_list(n, e);
}

Graph circulant(int k, std::span<const int> offsets) {
  if (k < 3) throw Error(ErrorCode::InvalidParameter, "circulant needs k >= 3, got " + std::to_string(k));
  if (offsets.empty()) throw Error(ErrorCode::InvalidParameter, "circulant needs at least one offset");
  std::set<int> given;
  std::set<int> steps;
  for (int s : offsets) {
    const int t = ((s % k) + k) % k;
    if (t == 0) throw Error(ErrorCode::InvalidParameter, "circulant offset " + std::to_string(s) + " is 0 mod k");
    if (!given.insert(t).second) {
      throw Error(ErrorCode::InvalidParameter, "circulant offset " + std::to_string(s) + " repeated mod k");
    }
    steps.insert(std::min(t, k - t));
  }
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    for (int s : steps) {
      if (2 * s == k && i >= k / 2) continue;
      e.push_back({i, (i + s) % k});
    }
  }
  return Graph::from_edge_list(k, e);
}

Graph generate(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  auto want = [&](std::size_t count) {
    if (p.size() != count) {
      throw Error(ErrorCode::InvalidParameter,
                  "expected " + std::to_string(count) + " parameter(s), got " + std::to_string(p.size()));
    }
  };
  switch (spec.kind) {
    case GeneratorKind::Cycle: want(1); return cycle(p[0]);
    case GeneratorKind::Complete: want(1); return complete(p[0]);
    case GeneratorKind::CompleteBipartite: want(1); return complete_bipartite(p[0]);
    case GeneratorKind::Petersen: want(0); return petersen();
    case GeneratorKind::Hypercube: want(1); return hypercube(p[0]);
    case GeneratorKind::Circulant:
      if (p.size() < 2) throw Error(ErrorCode::InvalidParameter, "circulant needs k and at least one offset");
      return circulant(p[0], std::span<const int>(p).subspan(1));
  }
  throw Error(ErrorCode::InvalidParameter, "unknown generator");
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  if (name == "cycle") return GeneratorKind::Cycle;
  if (name == "complete") return GeneratorKind::Complete;
  if (name == "bipartite" || name == "complete_bipartite") return GeneratorKind::CompleteBipartite;
  if (name == "petersen") return GeneratorKind::Petersen;
  if (name == "hypercube") return GeneratorKind::Hypercube;
  if (name == "circulant") return GeneratorKind::Circulant;
  return std::nullopt;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::istringstream& fields) {
    // blank lines are skipped
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fields = std::istringstream(line);
      return true;
    }
    return false;
  };
  auto read_pair = [&](long long& a, long long& b, const char* what) {
    std::istringstream fields;
    if (!next_line(fields)) throw Error(ErrorCode::ParseError, std::string("missing ") + what);
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest)) {
      throw Error(ErrorCode::ParseError, std::string("malformed ") + what + ": '" + line + "'");
    }
  };

  long long n = 0, m = 0;
  read_pair(n, m, "header");
  if (n < 1 || m < 0 || n > 1'000'000) throw Error(ErrorCode::ParseError, "bad header '" + line + "'");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    read_pair(u, v, "edge line");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge line '" + line + "'");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::istringstream extra;
  if (next_line(extra)) throw Error(ErrorCode::ParseError, "trailing content '" + line + "'");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace xyzq
