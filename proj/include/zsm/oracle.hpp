#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zsm/graph.hpp"

namespace zsm {

// Enumeration is capped: perfect matchings of K_order number (order-1)!!,
// i.e. 3, 15, 105, ..., 2027025 at order 16.
inline constexpr int kMaxEnumerationOrder = 16;
inline constexpr int kMaxDecompositionOrder = 8;

// Visits every perfect matching of K_order exactly once, in the
// deterministic order produced by pairing the lowest unmatched vertex with
// each candidate partner in increasing order. The callback returns false to
// stop early.
void for_each_perfect_matching(int order,
                               const std::function<bool(const Matching&)>& fn);

// First balanced perfect matching in enumeration order. The main solver
// predicts this never returns nullopt for a valid instance; an absence is a
// falsification event, which callers must report loudly.
std::optional<Matching> exists_balanced_matching(const ColouredGraph& g);

// All C(6,3) = 20 colourings of K_4 with exactly three black edges, ordered
// lexicographically by which pair slots are black. Only order 4 is
// enumerable; larger orders are sampled, not enumerated.
std::vector<ColouredGraph> enumerate_balanced_colourings(int order);

// Complete graph on 2kn vertices, k >= 2 colours, equal class sizes.
class KColouredGraph {
 public:
  KColouredGraph(int order, int k, std::vector<std::uint8_t> colours);

  int order() const { return order_; }
  int k() const { return k_; }
  int n() const { return order_ / (2 * k_); }
  long per_colour_total() const { return pair_count(order_) / k_; }
  int colour_of(Vertex u, Vertex v) const;
  std::string colour_string() const;  // digits '0'..'k-1', row-major

 private:
  int order_;
  int k_;
  std::vector<std::uint8_t> colours_;
};

// First perfect matching with exactly n edges of each of the k colours, or
// nullopt. Brute force over the full enumeration; order capped at 16.
std::optional<Matching> kcolour_balanced_matching(const KColouredGraph& g);

// Partition of all edges into 4n-1 perfect matchings, each with equal
// colour counts, found by backtracking; nullopt if no such decomposition
// exists. Order capped at 8.
std::optional<std::vector<Matching>> decompose_balanced(
    const ColouredGraph& g);

}  // namespace zsm
