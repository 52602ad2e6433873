#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zsm/colour.hpp"
#include "zsm/errors.hpp"

namespace zsm {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // canonical form: first < second

constexpr Edge canonical_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Position of pair (i, j), i < j, in the row-major triangular layout
// (0,1),(0,2),...,(0,order-1),(1,2),... used by the colour store and the
// instance text format.
constexpr long pair_index(int order, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  return static_cast<long>(i) * order - static_cast<long>(i) * (i + 1) / 2 +
         (j - i - 1);
}

constexpr long pair_count(int order) {
  return static_cast<long>(order) * (order - 1) / 2;
}

// Complete graph on 4n vertices with a total symmetric 2-edge-colouring and
// equally many edges of each colour. Balance is enforced at construction;
// everything downstream may assume it. Immutable once built.
class ColouredGraph {
 public:
  // red_bits[pair_index(order,i,j)] is true iff edge ij is red.
  ColouredGraph(int order, std::vector<bool> red_bits);

  static ColouredGraph from_colour_string(int order, const std::string& s);
  // Validating constructor from an explicit pair->colour assignment.
  // Rejects non-4n orders, self loops, out-of-range vertices, missing or
  // duplicate pairs, and unequal colour totals.
  static ColouredGraph from_edges(
      int order, const std::vector<std::tuple<Vertex, Vertex, Colour>>& edges);
  // Complete colouring from the set of black edges (everything else red).
  static ColouredGraph from_black_edges(int order,
                                        const std::vector<Edge>& black);

  int order() const { return order_; }
  int n() const { return order_ / 4; }
  long edge_count() const { return pair_count(order_); }
  long per_colour_total() const { return edge_count() / 2; }

  Colour colour_of(Vertex u, Vertex v) const;
  std::string colour_string() const;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  int order_;
  std::vector<bool> red_;
};

// Read view of a graph with the two colours optionally exchanged. All
// counting and search operations run on views so the solver's
// majority-colour normalization never mutates the stored graph.
class GraphView {
 public:
  GraphView(const ColouredGraph& g) : graph_(&g), flipped_(false) {}
  GraphView(const ColouredGraph& g, bool flipped)
      : graph_(&g), flipped_(flipped) {}

  Colour colour_of(Vertex u, Vertex v) const {
    Colour c = graph_->colour_of(u, v);
    return flipped_ ? opposite(c) : c;
  }
  int order() const { return graph_->order(); }
  int n() const { return graph_->n(); }
  bool flipped() const { return flipped_; }
  const ColouredGraph& graph() const { return *graph_; }

 private:
  const ColouredGraph* graph_;
  bool flipped_;
};

// Perfect matching stored as an involutive partner map with no fixed points.
// Validated once at construction; operations never re-check.
class Matching {
 public:
  explicit Matching(std::vector<Vertex> partner);

  static Matching canonical(int order);  // {(0,1),(2,3),...}
  static Matching from_pairs(int order, const std::vector<Edge>& pairs);

  int order() const { return static_cast<int>(partner_.size()); }
  Vertex partner(Vertex v) const;
  bool contains_edge(Vertex u, Vertex v) const;
  // Canonical edges (min,max), sorted ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> partner_;
};

struct ColourSplit {
  int black_edges = 0;
  int red_edges = 0;
  std::vector<Vertex> black_vertices;  // sorted; incident to black edges of m
  std::vector<Vertex> red_vertices;    // sorted; incident to red edges of m
};

ColourSplit colour_split(const GraphView& g, const Matching& m);

// |b(m) - r(m)|; always even.
int discrepancy(const GraphView& g, const Matching& m);

// (black, red) over edges with one endpoint in a and one in b.
// a and b must be disjoint.
std::pair<long, long> cross_colour_counts(const GraphView& g,
                                          const std::vector<Vertex>& a,
                                          const std::vector<Vertex>& b);

// (black, red) over edges with both endpoints in s.
std::pair<long, long> induced_colour_counts(const GraphView& g,
                                            const std::vector<Vertex>& s);

}  // namespace zsm
