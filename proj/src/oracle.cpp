#include "zsm/oracle.hpp"

#include <algorithm>
#include <string>

namespace zsm {

namespace {

bool extend_matching(std::vector<Vertex>& partner, int matched,
                     const std::function<bool(const Matching&)>& fn) {
  const int order = static_cast<int>(partner.size());
  if (matched == order) {
    return fn(Matching(partner));
  }
  Vertex u = 0;
  while (partner[u] != -1) ++u;
  partner[u] = u;  // reserve
  for (Vertex v = u + 1; v < order; ++v) {
    if (partner[v] != -1) continue;
    partner[u] = v;
    partner[v] = u;
    if (!extend_matching(partner, matched + 2, fn)) {
      partner[u] = -1;
      partner[v] = -1;
      return false;
    }
    partner[v] = -1;
  }
  partner[u] = -1;
  return true;
}

void check_enumeration_order(int order) {
  if (order <= 0 || order % 2 != 0) {
    throw InputError(Errc::odd_order,
                     "order must be even, got " + std::to_string(order));
  }
  if (order > kMaxEnumerationOrder) {
    throw InputError(Errc::too_large,
                     "order " + std::to_string(order) +
                         " exceeds the enumeration cap " +
                         std::to_string(kMaxEnumerationOrder));
  }
}

}  // namespace

void for_each_perfect_matching(
    int order, const std::function<bool(const Matching&)>& fn) {
  check_enumeration_order(order);
  std::vector<Vertex> partner(order, -1);
  extend_matching(partner, 0, fn);
}

std::optional<Matching> exists_balanced_matching(const ColouredGraph& g) {
  check_enumeration_order(g.order());
  std::optional<Matching> found;
  for_each_perfect_matching(g.order(), [&](const Matching& m) {
    if (discrepancy(GraphView(g), m) == 0) {
      found = m;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<ColouredGraph> enumerate_balanced_colourings(int order) {
  if (order != 4) {
    throw InputError(Errc::too_large,
                     "only order 4 is exhaustively enumerable");
  }
  // All 3-subsets of the 6 pair slots, lexicographic.
  std::vector<ColouredGraph> out;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        std::vector<bool> red(6, true);
        red[a] = red[b] = red[c] = false;
        out.emplace_back(4, std::move(red));
      }
    }
  }
  return out;
}

KColouredGraph::KColouredGraph(int order, int k,
                               std::vector<std::uint8_t> colours)
    : order_(order), k_(k), colours_(std::move(colours)) {
  if (k_ < 2) {
    throw InputError(Errc::bad_order,
                     "need at least two colours, got " + std::to_string(k_));
  }
  if (order_ < 2 * k_ || order_ % (2 * k_) != 0) {
    throw InputError(Errc::bad_order,
                     "order must be 2kn for n >= 1, got order " +
                         std::to_string(order_) + " with k " +
                         std::to_string(k_));
  }
  if (static_cast<long>(colours_.size()) != pair_count(order_)) {
    throw InputError(Errc::incomplete_colouring,
                     "expected " + std::to_string(pair_count(order_)) +
                         " edge colours, got " +
                         std::to_string(colours_.size()));
  }
  if (pair_count(order_) % k_ != 0) {
    throw InputError(Errc::indivisible_quota,
                     "edge count is not divisible by the colour count");
  }
  std::vector<long> totals(k_, 0);
  for (std::uint8_t c : colours_) {
    if (c >= k_) {
      throw InputError(Errc::parse_error,
                       "colour index " + std::to_string(c) + " out of range");
    }
    ++totals[c];
  }
  const long quota = pair_count(order_) / k_;
  for (int c = 0; c < k_; ++c) {
    if (totals[c] != quota) {
      throw InputError(Errc::unbalanced_colouring,
                       "colour " + std::to_string(c) + " has " +
                           std::to_string(totals[c]) + " edges, expected " +
                           std::to_string(quota));
    }
  }
}

int KColouredGraph::colour_of(Vertex u, Vertex v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) {
    throw InputError(Errc::vertex_out_of_range,
                     "vertex out of range on order " + std::to_string(order_));
  }
  if (u == v) {
    throw InputError(Errc::self_loop,
                     "self loop at vertex " + std::to_string(u));
  }
  return colours_[pair_index(order_, u, v)];
}

std::string KColouredGraph::colour_string() const {
  std::string s;
  s.reserve(colours_.size());
  for (std::uint8_t c : colours_) s.push_back(static_cast<char>('0' + c));
  return s;
}

std::optional<Matching> kcolour_balanced_matching(const KColouredGraph& g) {
  check_enumeration_order(g.order());
  const int n = g.n();
  std::optional<Matching> found;
  std::vector<int> counts(g.k(), 0);
  for_each_perfect_matching(g.order(), [&](const Matching& m) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& [u, v] : m.edges()) ++counts[g.colour_of(u, v)];
    if (std::all_of(counts.begin(), counts.end(),
                    [n](int c) { return c == n; })) {
      found = m;
      return false;
    }
    return true;
  });
  return found;
}

namespace {

struct DecompositionSearch {
  const ColouredGraph& g;
  int order;
  int n;
  std::vector<bool> used;               // by pair index
  std::vector<Vertex> factor_partner;   // current factor under construction
  std::vector<Edge> factor_edges;
  int factor_black = 0;
  int factor_red = 0;
  std::vector<Matching> factors;

  explicit DecompositionSearch(const ColouredGraph& graph)
      : g(graph),
        order(graph.order()),
        n(graph.n()),
        used(pair_count(graph.order()), false),
        factor_partner(graph.order(), -1) {}

  bool all_used() const {
    return std::find(used.begin(), used.end(), false) == used.end();
  }

  bool search() {
    if (static_cast<int>(factor_edges.size()) == order / 2) {
      factors.push_back(Matching::from_pairs(order, factor_edges));
      if (all_used()) return true;
      // start the next factor
      std::vector<Vertex> saved_partner(order, -1);
      std::swap(saved_partner, factor_partner);
      auto saved_edges = std::move(factor_edges);
      factor_edges.clear();
      int saved_black = factor_black, saved_red = factor_red;
      factor_black = factor_red = 0;
      bool ok = search();
      if (!ok) {
        factor_partner = std::move(saved_partner);
        factor_edges = std::move(saved_edges);
        factor_black = saved_black;
        factor_red = saved_red;
        factors.pop_back();
      }
      return ok;
    }
    Vertex u = 0;
    while (factor_partner[u] != -1) ++u;
    // Canonical factor order: each new factor pairs vertex 0 with its
    // smallest unused neighbour, so permutations of the same factor set are
    // searched once.
    Vertex forced = -1;
    if (factor_edges.empty()) {
      for (Vertex v = u + 1; v < order; ++v) {
        if (!used[pair_index(order, u, v)]) {
          forced = v;
          break;
        }
      }
    }
    for (Vertex v = u + 1; v < order; ++v) {
      if (forced != -1 && v != forced) continue;
      if (factor_partner[v] != -1) continue;
      long idx = pair_index(order, u, v);
      if (used[idx]) continue;
      bool black = g.colour_of(u, v) == Colour::black;
      if ((black ? factor_black : factor_red) >= n) continue;
      used[idx] = true;
      factor_partner[u] = v;
      factor_partner[v] = u;
      factor_edges.emplace_back(u, v);
      (black ? factor_black : factor_red) += 1;
      if (search()) return true;
      (black ? factor_black : factor_red) -= 1;
      factor_edges.pop_back();
      factor_partner[u] = -1;
      factor_partner[v] = -1;
      used[idx] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Matching>> decompose_balanced(
    const ColouredGraph& g) {
  if (g.order() > kMaxDecompositionOrder) {
    throw InputError(Errc::too_large,
                     "order " + std::to_string(g.order()) +
                         " exceeds the decomposition cap " +
                         std::to_string(kMaxDecompositionOrder));
  }
  DecompositionSearch search(g);
  if (search.search()) return search.factors;
  return std::nullopt;
}

}  // namespace zsm
