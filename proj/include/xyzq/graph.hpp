#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xyzq {

/// Unordered pair of vertex indices. Orientation is kept as supplied so that
/// writers reproduce the input byte-for-byte, but equality of edge *sets*
/// ignores it.
struct Edge {
  int u = 0;
  int v = 0;

  bool incident_to(int w) const { return u == w || v == w; }
  bool shares_endpoint(const Edge& o) const {
    return incident_to(o.u) || incident_to(o.v);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with a stable vertex order and a stable edge
/// order. The edge order is part of the value: it fixes the vertex order of
/// line graphs and xyz-transformations.
class Graph {
 public:
  /// Throws Error{SelfLoop | DuplicateEdge | IndexOutOfRange |
  /// InvalidParameter}. Edge order is the order of `pairs`.
  static Graph from_edge_list(int n, std::span<const Edge> pairs);
  static Graph from_edge_list(int n, std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<int> degrees() const;
  bool has_edge(int u, int v) const;

  /// Same vertex count and same set of unordered edges, order ignored.
  bool same_edge_set(const Graph& other) const;

  /// Value equality including edge order and orientation.
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
};

struct RegularityWitness {
  std::optional<int> degree;

  bool regular() const { return degree.has_value(); }
  explicit operator bool() const { return regular(); }
};

/// Degree r iff every vertex has degree r (2m = rn is asserted), absent
/// otherwise. The one-vertex graph is 0-regular.
RegularityWitness regularity(const Graph& g);

/// Same vertices; edges are exactly the non-edges of g, in lexicographic
/// (u < v) order.
Graph complement(const Graph& g);

/// Vertex i of the result is edge i of g. Throws Error{EmptyEdgeSet} when g
/// has no edges.
Graph line_graph(const Graph& g);

Graph empty_graph(int n);

// Corpus generators. Canonical orders:
//   cycle(k):               edges (i, i+1 mod k) for i = 0..k-1
//   complete(k):            (i, j), i < j, lexicographic
//   complete_bipartite(a):  parts {0..a-1}, {a..2a-1}; (i, a+j), i-major
//   petersen():             outer (i, i+1 mod 5), spokes (i, i+5),
//                           inner (5+i, 5+(i+2 mod 5)), each for i = 0..4
//   hypercube(d):           (v, v^2^b) for v ascending, b ascending, v < v^2^b
//   circulant(k, S):        connection set T = S ∪ -S (mod k); for each i
//                           ascending and each s in T with 1 <= s <= k/2
//                           ascending, edge (i, i+s mod k); when 2s = k only
//                           for i < k/2
// All throw Error{InvalidParameter} for parameters that do not give a simple
// regular graph.
Graph cycle(int k);
Graph complete(int k);
Graph complete_bipartite(int a);
Graph petersen();
Graph hypercube(int d);
Graph circulant(int k, std::span<const int> offsets);

enum class GeneratorKind { Cycle, Complete, CompleteBipartite, Petersen, Hypercube, Circulant };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Cycle;
  std::vector<int> params;  // k | k | a | (none) | d | k, s1, s2, ...
};

Graph generate(const GeneratorSpec& spec);

/// Parses a kind name ("cycle", "complete", "bipartite", "petersen",
/// "hypercube", "circulant").
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

/// Edge-list text format: "n m" header, then m lines "u v", 0-indexed.
/// Throws Error{ParseError} on malformed text and the from_edge_list errors
/// on invalid content.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace xyzq
