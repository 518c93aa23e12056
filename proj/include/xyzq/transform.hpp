#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xyzq/graph.hpp"

namespace xyzq {

/// One of the four choices 0, 1, +, - for each position of an xyz case.
enum class Sym : unsigned char { Zero, One, Plus, Minus };

char to_char(Sym s);
std::optional<Sym> parse_sym(char c);

struct XyzCase {
  Sym x = Sym::Zero;
  Sym y = Sym::Zero;
  Sym z = Sym::Zero;

  /// Position in the canonical order: x-major, then y, then z, symbols
  /// ordered 0, 1, +, -.
  int index() const;
  std::string to_string() const;
  /// Accepts exactly three characters from "01+-".
  static std::optional<XyzCase> parse(std::string_view text);

  friend auto operator<=>(const XyzCase& a, const XyzCase& b) { return a.index() <=> b.index(); }
  friend bool operator==(const XyzCase&, const XyzCase&) = default;
};

const std::array<XyzCase, 64>& list_cases();

/// G^s on V(G): empty, complete, G itself, or its complement.
Graph part_graph(const Graph& g, Sym s);

/// A cross edge joins vertex `vertex` of G to the vertex representing edge
/// `edge` of G.
struct CrossEdge {
  int vertex = 0;
  int edge = 0;
  friend bool operator==(const CrossEdge&, const CrossEdge&) = default;
};

/// z = 0: none; z = 1: all n*m pairs; z = +: incident pairs; z = -:
/// non-incident pairs. Ordered vertex-major, then edge index.
std::vector<CrossEdge> cross_edges(const Graph& g, Sym z);

/// The xyz-transformation of g on n + m vertices: 0..n-1 are V(G) in order,
/// n..n+m-1 are E(G) in edge order. Edge order of the result: part_graph(g, x)
/// edges, then part_graph(line_graph(g), y) edges shifted by n, then
/// cross_edges(g, z). Accepts irregular graphs; throws Error{EmptyEdgeSet}
/// when g has no edges.
Graph xyz_transform(const Graph& g, XyzCase c);

}  // namespace xyzq
