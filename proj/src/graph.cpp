#include "zsm/graph.hpp"

#include <algorithm>
#include <numeric>

namespace zsm {

namespace {

void check_vertex_range(int order, Vertex u, Vertex v) {
  if (u < 0 || u >= order || v < 0 || v >= order) {
    throw InputError(Errc::vertex_out_of_range,
                     "vertex out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") on order " +
                         std::to_string(order));
  }
  if (u == v) {
    throw InputError(Errc::self_loop,
                     "self loop at vertex " + std::to_string(u));
  }
}

}  // namespace

ColouredGraph::ColouredGraph(int order, std::vector<bool> red_bits)
    : order_(order), red_(std::move(red_bits)) {
  if (order_ < 4 || order_ % 4 != 0) {
    throw InputError(Errc::bad_order, "order must be 4n for n >= 1, got " +
                                          std::to_string(order_));
  }
  if (static_cast<long>(red_.size()) != pair_count(order_)) {
    throw InputError(Errc::incomplete_colouring,
                     "expected " + std::to_string(pair_count(order_)) +
                         " edge colours, got " + std::to_string(red_.size()));
  }
  long reds = std::count(red_.begin(), red_.end(), true);
  long blacks = pair_count(order_) - reds;
  if (reds != blacks) {
    throw InputError(Errc::unbalanced_colouring,
                     "colour totals differ: black " + std::to_string(blacks) +
                         ", red " + std::to_string(reds));
  }
}

ColouredGraph ColouredGraph::from_colour_string(int order,
                                                const std::string& s) {
  if (order < 4 || order % 4 != 0) {
    throw InputError(Errc::bad_order, "order must be 4n for n >= 1, got " +
                                          std::to_string(order));
  }
  std::vector<bool> red;
  red.reserve(s.size());
  for (char ch : s) {
    auto c = colour_from_char(ch);
    if (!c) {
      throw InputError(Errc::parse_error,
                       std::string("invalid colour character '") + ch + "'");
    }
    red.push_back(*c == Colour::red);
  }
  return ColouredGraph(order, std::move(red));
}

ColouredGraph ColouredGraph::from_edges(
    int order, const std::vector<std::tuple<Vertex, Vertex, Colour>>& edges) {
  if (order < 4 || order % 4 != 0) {
    throw InputError(Errc::bad_order, "order must be 4n for n >= 1, got " +
                                          std::to_string(order));
  }
  std::vector<bool> red(pair_count(order), false);
  std::vector<bool> seen(pair_count(order), false);
  for (const auto& [u, v, c] : edges) {
    check_vertex_range(order, u, v);
    long idx = pair_index(order, u, v);
    if (seen[idx]) {
      throw InputError(Errc::incomplete_colouring,
                       "duplicate pair (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
    }
    seen[idx] = true;
    red[idx] = (c == Colour::red);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError(Errc::incomplete_colouring,
                     "colouring does not cover every pair");
  }
  return ColouredGraph(order, std::move(red));
}

ColouredGraph ColouredGraph::from_black_edges(int order,
                                              const std::vector<Edge>& black) {
  if (order < 4 || order % 4 != 0) {
    throw InputError(Errc::bad_order, "order must be 4n for n >= 1, got " +
                                          std::to_string(order));
  }
  std::vector<bool> red(pair_count(order), true);
  for (const auto& [u, v] : black) {
    check_vertex_range(order, u, v);
    red[pair_index(order, u, v)] = false;
  }
  return ColouredGraph(order, std::move(red));
}

Colour ColouredGraph::colour_of(Vertex u, Vertex v) const {
  check_vertex_range(order_, u, v);
  return red_[pair_index(order_, u, v)] ? Colour::red : Colour::black;
}

std::string ColouredGraph::colour_string() const {
  std::string s;
  s.reserve(red_.size());
  for (bool r : red_) s.push_back(r ? 'R' : 'B');
  return s;
}

Matching::Matching(std::vector<Vertex> partner) : partner_(std::move(partner)) {
  int order = static_cast<int>(partner_.size());
  if (order == 0 || order % 2 != 0) {
    throw InputError(Errc::bad_matching,
                     "matching must cover a positive even number of vertices");
  }
  for (Vertex v = 0; v < order; ++v) {
    Vertex p = partner_[v];
    if (p < 0 || p >= order) {
      throw InputError(Errc::bad_matching,
                       "partner out of range at vertex " + std::to_string(v));
    }
    if (p == v) {
      throw InputError(Errc::bad_matching,
                       "fixed point at vertex " + std::to_string(v));
    }
    if (partner_[p] != v) {
      throw InputError(Errc::bad_matching,
                       "partner map is not an involution at vertex " +
                           std::to_string(v));
    }
  }
}

Matching Matching::canonical(int order) {
  if (order <= 0 || order % 2 != 0) {
    throw InputError(Errc::odd_order,
                     "order must be even, got " + std::to_string(order));
  }
  std::vector<Vertex> p(order);
  for (Vertex v = 0; v < order; ++v) p[v] = v ^ 1;
  return Matching(std::move(p));
}

Matching Matching::from_pairs(int order, const std::vector<Edge>& pairs) {
  if (order <= 0 || order % 2 != 0) {
    throw InputError(Errc::odd_order,
                     "order must be even, got " + std::to_string(order));
  }
  std::vector<Vertex> p(order, -1);
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= order || v < 0 || v >= order || u == v) {
      throw InputError(Errc::bad_matching,
                       "invalid pair (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
    }
    if (p[u] != -1 || p[v] != -1) {
      throw InputError(Errc::bad_matching,
                       "vertex matched twice in pair (" + std::to_string(u) +
                           "," + std::to_string(v) + ")");
    }
    p[u] = v;
    p[v] = u;
  }
  if (std::find(p.begin(), p.end(), -1) != p.end()) {
    throw InputError(Errc::bad_matching, "matching is not perfect");
  }
  return Matching(std::move(p));
}

Vertex Matching::partner(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw InputError(Errc::vertex_out_of_range,
                     "vertex out of range: " + std::to_string(v));
  }
  return partner_[v];
}

bool Matching::contains_edge(Vertex u, Vertex v) const {
  return u != v && u >= 0 && u < order() && v >= 0 && v < order() &&
         partner_[u] == v;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> es;
  es.reserve(partner_.size() / 2);
  for (Vertex v = 0; v < order(); ++v) {
    if (v < partner_[v]) es.emplace_back(v, partner_[v]);
  }
  return es;
}

ColourSplit colour_split(const GraphView& g, const Matching& m) {
  ColourSplit split;
  for (const auto& [u, v] : m.edges()) {
    if (g.colour_of(u, v) == Colour::black) {
      ++split.black_edges;
      split.black_vertices.push_back(u);
      split.black_vertices.push_back(v);
    } else {
      ++split.red_edges;
      split.red_vertices.push_back(u);
      split.red_vertices.push_back(v);
    }
  }
  std::sort(split.black_vertices.begin(), split.black_vertices.end());
  std::sort(split.red_vertices.begin(), split.red_vertices.end());
  return split;
}

int discrepancy(const GraphView& g, const Matching& m) {
  int b = 0, r = 0;
  for (const auto& [u, v] : m.edges()) {
    (g.colour_of(u, v) == Colour::black ? b : r) += 1;
  }
  return b >= r ? b - r : r - b;
}

std::pair<long, long> cross_colour_counts(const GraphView& g,
                                          const std::vector<Vertex>& a,
                                          const std::vector<Vertex>& b) {
  std::vector<bool> in_a(g.order(), false);
  for (Vertex v : a) in_a[v] = true;
  for (Vertex v : b) {
    if (in_a[v]) {
      throw InputError(Errc::not_disjoint,
                       "vertex sets share vertex " + std::to_string(v));
    }
  }
  long black = 0, red = 0;
  for (Vertex u : a) {
    for (Vertex v : b) {
      (g.colour_of(u, v) == Colour::black ? black : red) += 1;
    }
  }
  return {black, red};
}

std::pair<long, long> induced_colour_counts(const GraphView& g,
                                            const std::vector<Vertex>& s) {
  long black = 0, red = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      (g.colour_of(s[i], s[j]) == Colour::black ? black : red) += 1;
    }
  }
  return {black, red};
}

}  // namespace zsm
