#include "zsm/swap.hpp"

#include <algorithm>

namespace zsm {

namespace {

bool quad_distinct(const SwapQuad& q) {
  return q.u != q.v && q.u != q.x && q.u != q.y && q.v != q.x && q.v != q.y &&
         q.x != q.y;
}

// The four labellings of an (edge, edge) pair that keep the first edge
// first: (a,b,c,d), (a,b,d,c), (b,a,c,d), (b,a,d,c). Scanning them in this
// fixed order makes every search deterministic.
std::array<SwapQuad, 4> orientations(Edge e, Edge f) {
  auto [a, b] = e;
  auto [c, d] = f;
  return {SwapQuad{a, b, c, d}, SwapQuad{a, b, d, c}, SwapQuad{b, a, c, d},
          SwapQuad{b, a, d, c}};
}

std::vector<Edge> matching_edges_of_colour(const GraphView& g,
                                           const Matching& m, Colour c) {
  std::vector<Edge> out;
  for (const auto& e : m.edges()) {
    if (g.colour_of(e.first, e.second) == c) out.push_back(e);
  }
  return out;  // m.edges() is sorted, so this is too
}

}  // namespace

Matching apply_swap(const Matching& m, const SwapQuad& q) {
  const int order = m.order();
  auto in_range = [order](Vertex v) { return v >= 0 && v < order; };
  if (!in_range(q.u) || !in_range(q.v) || !in_range(q.x) || !in_range(q.y) ||
      !quad_distinct(q) || !m.contains_edge(q.u, q.v) ||
      !m.contains_edge(q.x, q.y)) {
    return m;
  }
  std::vector<Vertex> p(order);
  for (Vertex v = 0; v < order; ++v) p[v] = m.partner(v);
  p[q.u] = q.x;
  p[q.x] = q.u;
  p[q.v] = q.y;
  p[q.y] = q.v;
  return Matching(std::move(p));
}

PairClassification classify_pair(const GraphView& g, const Matching& m,
                                 Edge black_edge, Edge red_edge) {
  if (!m.contains_edge(black_edge.first, black_edge.second) ||
      !m.contains_edge(red_edge.first, red_edge.second) ||
      canonical_edge(black_edge.first, black_edge.second) ==
          canonical_edge(red_edge.first, red_edge.second)) {
    throw InputError(Errc::not_matching_edges,
                     "classify_pair needs two distinct matching edges");
  }
  if (g.colour_of(black_edge.first, black_edge.second) != Colour::black ||
      g.colour_of(red_edge.first, red_edge.second) != Colour::red) {
    throw InputError(Errc::wrong_colours,
                     "classify_pair needs a black and a red matching edge");
  }

  auto cross_of = [&](const SwapQuad& q) -> std::array<Colour, 4> {
    return {g.colour_of(q.u, q.x), g.colour_of(q.v, q.y),
            g.colour_of(q.u, q.y), g.colour_of(q.v, q.x)};
  };

  const auto quads = orientations(black_edge, red_edge);
  int reds = 0;
  for (Colour c : cross_of(quads[0])) {
    if (c == Colour::red) ++reds;
  }

  PairVariety variety = PairVariety::v1;
  // Wanted canonical pattern, as a predicate on (ux, vy, uy, vx).
  auto matches = [&](const std::array<Colour, 4>& cs) {
    switch (variety) {
      case PairVariety::v1:
      case PairVariety::v6:
        return true;
      case PairVariety::v2:  // the single red edge sits at vy
        return cs[1] == Colour::red;
      case PairVariety::v3:  // ux black, vy red
        return cs[0] == Colour::black && cs[1] == Colour::red;
      case PairVariety::v4:  // straight pair black, diagonal pair red
        return cs[0] == Colour::black;
      case PairVariety::v5:  // the single black edge sits at ux
        return cs[0] == Colour::black;
    }
    return false;
  };

  if (reds == 0) {
    variety = PairVariety::v1;
  } else if (reds == 1) {
    variety = PairVariety::v2;
  } else if (reds == 3) {
    variety = PairVariety::v5;
  } else if (reds == 4) {
    variety = PairVariety::v6;
  } else {
    // Two reds: independent iff one of the pairings {ux,vy} / {uy,vx} is
    // entirely red; otherwise they share a vertex.
    auto cs = cross_of(quads[0]);
    bool straight_red = cs[0] == Colour::red && cs[1] == Colour::red;
    bool diagonal_red = cs[2] == Colour::red && cs[3] == Colour::red;
    variety =
        (straight_red || diagonal_red) ? PairVariety::v4 : PairVariety::v3;
  }

  for (const auto& q : quads) {
    auto cs = cross_of(q);
    if (matches(cs)) return PairClassification{variety, q, cs};
  }
  return PairClassification{variety, quads[0], cross_of(quads[0])};
}

std::optional<SwapQuad> find_reducing_swap(const GraphView& g,
                                           const Matching& m,
                                           Colour majority) {
  const Colour minority = opposite(majority);
  const auto maj_edges = matching_edges_of_colour(g, m, majority);
  const auto min_edges = matching_edges_of_colour(g, m, minority);
  for (const auto& me : maj_edges) {
    for (const auto& ne : min_edges) {
      auto [a, b] = me;
      auto [c, d] = ne;
      if (g.colour_of(a, c) == minority && g.colour_of(b, d) == minority) {
        return SwapQuad{a, b, c, d};
      }
      if (g.colour_of(a, d) == minority && g.colour_of(b, c) == minority) {
        return SwapQuad{a, b, d, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<RedEdgeHit> find_red_edge_in_black_side(const GraphView& g,
                                                      const Matching& m) {
  const auto split = colour_split(g, m);
  const auto& side = split.black_vertices;  // sorted
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::size_t j = i + 1; j < side.size(); ++j) {
      Vertex u = side[i], x = side[j];
      if (g.colour_of(u, x) == Colour::red) {
        return RedEdgeHit{u, x, m.partner(u), m.partner(x)};
      }
    }
  }
  return std::nullopt;
}

std::optional<SwapQuad> find_parallel_red_pair(
    const GraphView& g, const Matching& m,
    const std::vector<Vertex>& excluded) {
  std::vector<bool> banned(m.order(), false);
  for (Vertex v : excluded) banned[v] = true;

  std::vector<Edge> candidates;
  for (const auto& e : m.edges()) {
    if (g.colour_of(e.first, e.second) == Colour::black &&
        !banned[e.first] && !banned[e.second]) {
      candidates.push_back(e);
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      auto [p, q] = candidates[i];
      auto [r, s] = candidates[j];
      if (g.colour_of(p, r) == Colour::red &&
          g.colour_of(q, s) == Colour::red) {
        return SwapQuad{p, q, r, s};
      }
      if (g.colour_of(p, s) == Colour::red &&
          g.colour_of(q, r) == Colour::red) {
        return SwapQuad{p, q, s, r};
      }
    }
  }
  return std::nullopt;
}

std::optional<SwapQuad> find_mixed_quad(const GraphView& g, const Matching& m,
                                        Colour side,
                                        std::pair<Colour, Colour> pattern) {
  const auto side_edges = matching_edges_of_colour(g, m, side);
  for (std::size_t i = 0; i < side_edges.size(); ++i) {
    for (std::size_t j = i + 1; j < side_edges.size(); ++j) {
      for (const auto& q : orientations(side_edges[i], side_edges[j])) {
        if (g.colour_of(q.u, q.x) == pattern.first &&
            g.colour_of(q.v, q.y) == pattern.second) {
          return q;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace zsm
