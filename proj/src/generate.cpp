#include "zsm/generate.hpp"

#include <string>

namespace zsm {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Accept only draws from the largest multiple of `bound`; the remainder
  // would bias the low values.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

namespace {

std::vector<Edge> all_pairs(int order) {
  std::vector<Edge> pairs;
  pairs.reserve(pair_count(order));
  for (Vertex i = 0; i < order; ++i) {
    for (Vertex j = i + 1; j < order; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

ColouredGraph random_balanced_colouring(int n, std::uint64_t seed) {
  if (n < 1) {
    throw InputError(Errc::bad_order, "n must be positive");
  }
  const int order = 4 * n;
  auto pairs = all_pairs(order);
  Rng rng(seed);
  rng.shuffle(pairs);
  const long quota = pair_count(order) / 2;
  std::vector<bool> red(pair_count(order), true);
  for (long i = 0; i < quota; ++i) {
    red[pair_index(order, pairs[i].first, pairs[i].second)] = false;
  }
  return ColouredGraph(order, std::move(red));
}

ColouredGraph clique_split_colouring(int n, int s) {
  if (n < 1) {
    throw InputError(Errc::bad_order, "n must be positive");
  }
  const int order = 4 * n;
  if (s < 2 || s > order) {
    throw InputError(Errc::vertex_out_of_range,
                     "clique size must be between 2 and 4n");
  }
  const long quota = pair_count(order) / 2;
  const long clique_edges = static_cast<long>(s) * (s - 1) / 2;
  if (clique_edges > quota) {
    throw InputError(Errc::quota_exceeded,
                     "clique of size " + std::to_string(s) + " has " +
                         std::to_string(clique_edges) +
                         " edges, over the black quota " +
                         std::to_string(quota));
  }
  std::vector<bool> red(pair_count(order), true);
  for (Vertex i = 0; i < s; ++i) {
    for (Vertex j = i + 1; j < s; ++j) red[pair_index(order, i, j)] = false;
  }
  long black = clique_edges;
  for (Vertex i = 0; i < order && black < quota; ++i) {
    for (Vertex j = i + 1; j < order && black < quota; ++j) {
      long idx = pair_index(order, i, j);
      if (red[idx]) {
        red[idx] = false;
        ++black;
      }
    }
  }
  return ColouredGraph(order, std::move(red));
}

Matching random_matching(int order, std::uint64_t seed) {
  if (order <= 0 || order % 2 != 0) {
    throw InputError(Errc::odd_order,
                     "order must be even, got " + std::to_string(order));
  }
  std::vector<Vertex> perm(order);
  for (Vertex v = 0; v < order; ++v) perm[v] = v;
  Rng rng(seed);
  rng.shuffle(perm);
  std::vector<Edge> pairs;
  pairs.reserve(order / 2);
  for (int i = 0; i < order; i += 2) pairs.emplace_back(perm[i], perm[i + 1]);
  return Matching::from_pairs(order, pairs);
}

KColouredGraph random_k_colouring(int k, int n, std::uint64_t seed) {
  if (k < 2 || n < 1) {
    throw InputError(Errc::bad_order, "need k >= 2 and n >= 1");
  }
  const int order = 2 * k * n;
  if (pair_count(order) % k != 0) {
    throw InputError(Errc::indivisible_quota,
                     "edge count is not divisible by the colour count");
  }
  auto pairs = all_pairs(order);
  Rng rng(seed);
  rng.shuffle(pairs);
  const long quota = pair_count(order) / k;
  std::vector<std::uint8_t> colours(pair_count(order), 0);
  for (long i = 0; i < static_cast<long>(pairs.size()); ++i) {
    colours[pair_index(order, pairs[i].first, pairs[i].second)] =
        static_cast<std::uint8_t>(i / quota);
  }
  return KColouredGraph(order, k, std::move(colours));
}

}  // namespace zsm
