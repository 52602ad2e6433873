#pragma once

#include <vector>

#include "zsm/graph.hpp"

// Small instances used across the test suite. Each deep fixture is built so
// that the solver's first step lands in one specific branch of the
// discrepancy-2 case tree when started from {01,23,45,67} (order 8) or
// {01,...,(10,11)} (order 12); the expected swaps were worked out by hand
// from the colour tables below.
namespace fixtures {

using zsm::ColouredGraph;
using zsm::Edge;

// K_4, black triangle on {0,1,2}: colour string BBRBRR.
inline ColouredGraph g1() {
  return ColouredGraph::from_black_edges(4, {{0, 1}, {0, 2}, {1, 2}});
}

// K_4, black {01,02,23}: the canonical start {01,23} is all black.
inline ColouredGraph g2() {
  return ColouredGraph::from_black_edges(4, {{0, 1}, {0, 2}, {2, 3}});
}

// K_8, black inside {0,1,2,3} and inside {4,5,6,7} plus the cross edges
// 04, 15; the other 14 cross edges red.
inline ColouredGraph g3() {
  std::vector<Edge> black;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) black.push_back({i, j});
  for (int i = 4; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) black.push_back({i, j});
  black.push_back({0, 4});
  black.push_back({1, 5});
  return ColouredGraph::from_black_edges(8, black);
}

// Discrepancy 2 from {01,23,45,67} (black 01,23,45; red 67), exactly 4n = 8
// red edges inside the black side, all incident to 0 or 1, single v2 pair
// (01,67) with red cross 06, and every edge from 7 into {2,3,4,5} red.
// First step must take the two-swap route (0,1,7,6);(0,7,2,3).
inline ColouredGraph deep_fig6() {
  return ColouredGraph::from_black_edges(
      8, {{0, 1}, {2, 3}, {4, 5},                          // matching
          {2, 4}, {2, 5}, {3, 4}, {3, 5},                  // inside {2..5}
          {0, 7}, {1, 6}, {1, 7}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});  // cross
}

// As deep_fig6 but 7 sees 2 and 3 by black edges (the v3 pair (23,67) has
// its red cross edges on 6). First step: (0,1,6,7);(1,7,3,2).
inline ColouredGraph deep_fig5() {
  return ColouredGraph::from_black_edges(
      8, {{0, 1}, {2, 3}, {4, 5},
          {2, 4}, {2, 5}, {3, 4}, {3, 5},
          {0, 7}, {1, 6}, {1, 7}, {2, 7}, {3, 7}, {4, 6}, {5, 6}});
}

// Exactly 4n red edges inside the black side but a parallel red pair
// (24, 35) clear of the v2 edge 01. First step: (0,1,7,6);(2,3,4,5).
inline ColouredGraph deep_avoid_uv() {
  return ColouredGraph::from_black_edges(
      8, {{0, 1}, {2, 3}, {4, 5},
          {0, 3}, {1, 2}, {0, 5}, {1, 4},
          {0, 7}, {1, 6}, {1, 7}, {2, 7}, {3, 7}, {4, 6}, {5, 6}});
}

// As deep_avoid_uv but the pair (45, 67) is reducible (cross 47, 56 red,
// independent). Single reducing swap (4,5,7,6).
inline ColouredGraph deep_reducible() {
  return ColouredGraph::from_black_edges(
      8, {{0, 1}, {2, 3}, {4, 5},
          {0, 3}, {1, 2}, {0, 5}, {1, 4},
          {0, 7}, {1, 6}, {1, 7}, {2, 7}, {3, 7}, {4, 6}, {5, 7}});
}

// Ten red edges (more than 4n) inside the black side; black cross majority.
// First step: black-increasing swap (6,7,1,0), then parallel pair
// (2,3,4,5).
inline ColouredGraph deep_more_than_4n() {
  return ColouredGraph::from_black_edges(
      8, {{0, 1}, {2, 3}, {4, 5},
          {0, 3}, {1, 2},
          {0, 7}, {1, 6}, {1, 7}, {2, 7}, {3, 7}, {4, 6}, {4, 7}, {5, 6},
          {5, 7}});
}

// Order 12, discrepancy 2 with equal cross counts (16 black, 16 red) and a
// single black edge 8-10 inside the red side. First step: red-side mixed
// swap (9,8,11,10), then parallel pair (0,1,2,3).
inline ColouredGraph deep_equal_cross() {
  std::vector<Edge> black = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  // black pairings inside the black side
  for (Edge e : std::vector<Edge>{{0, 4}, {1, 5}, {0, 5}, {1, 4},
                                  {0, 6}, {1, 7}, {0, 7}, {1, 6},
                                  {2, 6}, {3, 7}, {2, 7}, {3, 6}}) {
    black.push_back(e);
  }
  for (int i = 0; i < 8; ++i) {
    black.push_back({i, 10});
    black.push_back({i, 11});
  }
  black.push_back({8, 10});
  return ColouredGraph::from_black_edges(12, black);
}

// The deep_fig6 configuration scaled to n = 3: black matching edges
// (0,1),(2,3),(4,5),(6,7), red (8,9),(10,11); the 4n = 12 red edges inside
// the black side all touch 0 or 1, the v2 pair is (01,89) with red cross
// 08, every edge from 9 into {2..7} is red, and the pairs against (10,11)
// are v3 with their red cross edges sharing vertex 10.
inline ColouredGraph deep_fig6_n3() {
  std::vector<Edge> black = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  for (int i = 2; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) black.push_back({i, j});
  for (Edge e : std::vector<Edge>{{0, 9}, {1, 8}, {1, 9}}) black.push_back(e);
  for (int i = 2; i < 8; ++i) black.push_back({i, 8});
  for (int i = 0; i < 8; ++i) black.push_back({i, 11});
  return ColouredGraph::from_black_edges(12, black);
}

// Order 20 with the black side of the canonical matching monochromatic:
// black K_14 on {0..13} plus the four edges (14,16),(14,17),(14,18),(14,19).
// Canonical start has b=7, r=3; the first two steps are the monochromatic
// cases 2.1 then 3.1.
inline ColouredGraph mono_order20() {
  std::vector<Edge> black;
  for (int i = 0; i < 14; ++i)
    for (int j = i + 1; j < 14; ++j) black.push_back({i, j});
  for (int j = 16; j < 20; ++j) black.push_back({14, j});
  return ColouredGraph::from_black_edges(20, black);
}

// Order 8, all-black canonical start whose first red edge in scan order is
// (1,2) with 03 black: exercises the decrease-2 branch of case 2.2.
inline ColouredGraph two_two_black_branch() {
  return ColouredGraph::from_black_edges(
      8, {{0, 1}, {2, 3}, {4, 5}, {6, 7},
          {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7},
          {1, 3}, {1, 4}, {1, 5}, {1, 6}});
}

}  // namespace fixtures
