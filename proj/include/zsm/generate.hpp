#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zsm/graph.hpp"
#include "zsm/oracle.hpp"

namespace zsm {

// Deterministic cross-platform randomness: mt19937_64 (the algorithm is
// pinned by the standard) with rejection-sampled bounded draws and a plain
// Fisher-Yates shuffle. Same seed, same parameters => identical output on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound >= 1; rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Uniformly random colouring with exactly 4n^2 - n black edges: seeded
// shuffle of the edge list, first half black.
ColouredGraph random_balanced_colouring(int n, std::uint64_t seed);

// All edges inside {0..s-1} black, remaining black quota filled in
// row-major pair order, rest red. Requires 2 <= s <= 4n and
// C(s,2) <= 4n^2 - n.
ColouredGraph clique_split_colouring(int n, int s);

// Uniformly random perfect matching: seeded shuffle of the vertices, paired
// consecutively.
Matching random_matching(int order, std::uint64_t seed);

// Uniformly random k-colouring of K_2kn with equal per-colour quotas.
KColouredGraph random_k_colouring(int k, int n, std::uint64_t seed);

}  // namespace zsm
