#pragma once

#include <array>
#include <optional>
#include <utility>

#include "zsm/graph.hpp"

namespace zsm {

struct SwapQuad {
  Vertex u, v, x, y;
  friend bool operator==(const SwapQuad&, const SwapQuad&) = default;
};

// The swap operator: if uv and xy are disjoint edges of m, replace them by
// ux and vy; otherwise return m unchanged. Total by definition, and always
// returns a perfect matching.
Matching apply_swap(const Matching& m, const SwapQuad& q);

// Classification of the four cross edges (ux, vy, uy, vx) between a black
// matching edge uv and a red matching edge xy, up to relabelling u<->v and
// x<->y:
//   v1  four black
//   v2  exactly one red
//   v3  two red sharing a vertex
//   v4  two red forming an independent pair (and two black likewise)
//   v5  exactly one black
//   v6  four red
// A pair admits a black-decreasing swap iff {ux,vy} or {uy,vx} is entirely
// red, which happens exactly for v4, v5, v6.
enum class PairVariety { v1, v2, v3, v4, v5, v6 };

constexpr bool reducible(PairVariety v) {
  return v == PairVariety::v4 || v == PairVariety::v5 || v == PairVariety::v6;
}

struct PairClassification {
  PairVariety variety;
  SwapQuad oriented;             // relabelled to the variety's canonical form
  std::array<Colour, 4> cross;   // colours of (ux, vy, uy, vx) once oriented
};

PairClassification classify_pair(const GraphView& g, const Matching& m,
                                 Edge black_edge, Edge red_edge);

// Scans (majority-colour edge, minority-colour edge) pairs of m in
// lexicographic order and returns the first quadruple (u,v,x,y) with uv the
// majority edge, xy the minority edge and ux, vy both minority-coloured, so
// the swap trades one majority edge for a minority one. Absent if no pair of
// edges admits such a swap.
std::optional<SwapQuad> find_reducing_swap(const GraphView& g,
                                           const Matching& m, Colour majority);

struct RedEdgeHit {
  Vertex u, x;  // red edge inside the black side
  Vertex v, y;  // v = partner(u), y = partner(x)
  friend bool operator==(const RedEdgeHit&, const RedEdgeHit&) = default;
};

// First red edge ux (lexicographic) with both endpoints covered by black
// matching edges; absent iff the black side induces no red edge.
std::optional<RedEdgeHit> find_red_edge_in_black_side(const GraphView& g,
                                                      const Matching& m);

// First p,q,r,s in the black side, none in `excluded`, with pq, rs edges of
// m and pr, qs both red.
std::optional<SwapQuad> find_parallel_red_pair(
    const GraphView& g, const Matching& m,
    const std::vector<Vertex>& excluded);

// First quadruple (u,v,x,y) with uv, xy edges of m, all four vertices on the
// matching edges of colour `side`, and (colour(ux), colour(vy)) equal to
// `pattern`. Both orientations of each edge are tried.
std::optional<SwapQuad> find_mixed_quad(const GraphView& g, const Matching& m,
                                        Colour side,
                                        std::pair<Colour, Colour> pattern);

}  // namespace zsm
