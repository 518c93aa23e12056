#include "xyzq/transform.hpp"

#include "xyzq/core.hpp"

namespace xyzq {

namespace {

constexpr std::array<Sym, 4> kSymbols{Sym::Zero, Sym::One, Sym::Plus, Sym::Minus};

}  // namespace

char to_char(Sym s) {
  switch (s) {
    case Sym::Zero: return '0';
    case Sym::One: return '1';
    case Sym::Plus: return '+';
    case Sym::Minus: return '-';
  }
  return '?';
}

std::optional<Sym> parse_sym(char c) {
  switch (c) {
    case '0': return Sym::Zero;
    case '1': return Sym::One;
    case '+': return Sym::Plus;
    case '-': return Sym::Minus;
    default: return std::nullopt;
  }
}

int XyzCase::index() const {
  return 16 * static_cast<int>(x) + 4 * static_cast<int>(y) + static_cast<int>(z);
}

std::string XyzCase::to_string() const { return {to_char(x), to_char(y), to_char(z)}; }

std::optional<XyzCase> XyzCase::parse(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  const auto x = parse_sym(text[0]);
  const auto y = parse_sym(text[1]);
  const auto z = parse_sym(text[2]);
  if (!x || !y || !z) return std::nullopt;
  return XyzCase{*x, *y, *z};
}

const std::array<XyzCase, 64>& list_cases() {
  static const std::array<XyzCase, 64> cases = [] {
    std::array<XyzCase, 64> out{};
    std::size_t i = 0;
    for (Sym x : kSymbols) {
      for (Sym y : kSymbols) {
        for (Sym z : kSymbols) out[i++] = XyzCase{x, y, z};
      }
    }
    return out;
  }();
  return cases;
}

Graph part_graph(const Graph& g, Sym s) {
  switch (s) {
    case Sym::Zero: return empty_graph(g.vertex_count());
    case Sym::One: return complete(g.vertex_count());
    case Sym::Plus: return g;
    case Sym::Minus: return complement(g);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown symbol");
}

std::vector<CrossEdge> cross_edges(const Graph& g, Sym z) {
  std::vector<CrossEdge> out;
  if (z == Sym::Zero) return out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int j = 0; j < g.edge_count(); ++j) {
      const bool incident = g.edges()[j].incident_to(v);
      if (z == Sym::One || (z == Sym::Plus && incident) || (z == Sym::Minus && !incident)) {
        out.push_back({v, j});
      }
    }
  }
  return out;
}

Graph xyz_transform(const Graph& g, XyzCase c) {
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyEdgeSet, "xyz-transformation needs at least one edge");
  const int n = g.vertex_count();
  std::vector<Edge> edges = part_graph(g, c.x).edges();
  const Graph y_part = part_graph(line_graph(g), c.y);
  for (const Edge& e : y_part.edges()) edges.push_back({n + e.u, n + e.v});
  for (const CrossEdge& w : cross_edges(g, c.z)) edges.push_back({w.vertex, n + w.edge});
  return Graph::from_edge_list(n + g.edge_count(), edges);
}

}  // namespace xyzq
