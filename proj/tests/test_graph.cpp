#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "zsm/generate.hpp"
#include "zsm/graph.hpp"

using namespace zsm;

namespace {

bool input_error_code(const std::function<void()>& fn, Errc want) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("graph construction validates order, completeness and balance") {
  auto g1 = fixtures::g1();
  CHECK(g1.order() == 4);
  CHECK(g1.n() == 1);
  CHECK(g1.per_colour_total() == 3);
  CHECK(g1.colour_string() == "BBRBRR");

  CHECK(input_error_code(
      [] {
        ColouredGraph::from_colour_string(4, "BBBBBB");
      },
      Errc::unbalanced_colouring));
  CHECK(input_error_code(
      [] {
        ColouredGraph::from_colour_string(6, "BBBRRRBBBRRRBBB");
      },
      Errc::bad_order));
  CHECK(input_error_code(
      [] {
        ColouredGraph::from_colour_string(4, "BBRBR");
      },
      Errc::incomplete_colouring));
  CHECK(input_error_code(
      [] {
        ColouredGraph::from_colour_string(4, "BBRBRX");
      },
      Errc::parse_error));

  // duplicate and missing pairs through the explicit constructor
  CHECK(input_error_code(
      [] {
        ColouredGraph::from_edges(4, {{0, 1, Colour::black},
                                      {1, 0, Colour::red},
                                      {0, 2, Colour::black},
                                      {0, 3, Colour::red},
                                      {1, 2, Colour::black},
                                      {1, 3, Colour::red}});
      },
      Errc::incomplete_colouring));
  CHECK(input_error_code(
      [] {
        ColouredGraph::from_edges(4, {{0, 1, Colour::black}});
      },
      Errc::incomplete_colouring));
  CHECK(input_error_code(
      [] {
        ColouredGraph::from_edges(4, {{2, 2, Colour::black}});
      },
      Errc::self_loop));
}

TEST_CASE("colour lookup is symmetric and range checked") {
  auto g1 = fixtures::g1();
  CHECK(g1.colour_of(0, 1) == Colour::black);
  CHECK(g1.colour_of(3, 0) == Colour::red);
  CHECK(g1.colour_of(0, 3) == g1.colour_of(3, 0));
  CHECK(input_error_code([&] { g1.colour_of(2, 2); }, Errc::self_loop));
  CHECK(input_error_code([&] { g1.colour_of(0, 4); },
                         Errc::vertex_out_of_range));
}

TEST_CASE("flipped view exchanges the colours") {
  auto g1 = fixtures::g1();
  GraphView flipped(g1, true);
  CHECK(flipped.colour_of(0, 1) == Colour::red);
  CHECK(flipped.colour_of(0, 3) == Colour::black);
  CHECK(opposite(opposite(Colour::black)) == Colour::black);
  CHECK(opposite(opposite(Colour::red)) == Colour::red);
}

TEST_CASE("matching validation") {
  auto m = Matching::canonical(4);
  CHECK(m.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(m.partner(0) == 1);
  CHECK(m.partner(3) == 2);
  CHECK(m.contains_edge(1, 0));
  CHECK(!m.contains_edge(0, 2));

  CHECK_THROWS_AS(Matching::canonical(5), InputError);
  CHECK_THROWS_AS(Matching::from_pairs(4, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Matching::from_pairs(4, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Matching::from_pairs(4, {{0, 0}, {2, 3}}), InputError);
  CHECK_THROWS_AS(Matching(std::vector<Vertex>{1, 0, 3, 3}), InputError);
}

TEST_CASE("colour split and discrepancy on the fixture graphs") {
  auto g1 = fixtures::g1();
  auto g2 = fixtures::g2();

  auto s = colour_split(g1, Matching::from_pairs(4, {{0, 1}, {2, 3}}));
  CHECK(s.black_edges == 1);
  CHECK(s.red_edges == 1);
  CHECK(s.black_vertices == std::vector<Vertex>{0, 1});
  CHECK(s.red_vertices == std::vector<Vertex>{2, 3});

  auto s2 = colour_split(g2, Matching::from_pairs(4, {{0, 1}, {2, 3}}));
  CHECK(s2.black_edges == 2);
  CHECK(s2.red_edges == 0);
  CHECK(s2.black_vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(s2.red_vertices.empty());

  auto s3 = colour_split(g2, Matching::from_pairs(4, {{0, 3}, {1, 2}}));
  CHECK(s3.black_edges == 0);
  CHECK(s3.red_edges == 2);

  CHECK(discrepancy(g2, Matching::from_pairs(4, {{0, 1}, {2, 3}})) == 2);
  CHECK(discrepancy(g1, Matching::from_pairs(4, {{0, 2}, {1, 3}})) == 0);
}

TEST_CASE("cross and induced counts") {
  auto g1 = fixtures::g1();
  auto counts = cross_colour_counts(g1, {0, 1}, {2, 3});
  CHECK(counts == std::pair<long, long>{2, 2});
  CHECK(cross_colour_counts(g1, {}, {0, 1}) == std::pair<long, long>{0, 0});
  CHECK(input_error_code([&] { cross_colour_counts(g1, {0, 1}, {1, 2}); },
                         Errc::not_disjoint));

  CHECK(induced_colour_counts(g1, {0, 1, 2}) == std::pair<long, long>{3, 0});
  CHECK(induced_colour_counts(g1, {3}) == std::pair<long, long>{0, 0});
}

TEST_CASE("counting properties over a random corpus") {
  for (int n : {1, 2, 3}) {
    const int order = 4 * n;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto g = random_balanced_colouring(n, seed);
      auto m = random_matching(order, seed * 31 + 7);
      auto split = colour_split(g, m);

      CHECK(split.black_edges + split.red_edges == 2 * n);
      CHECK(static_cast<int>(split.black_vertices.size()) ==
            2 * split.black_edges);
      CHECK(static_cast<int>(split.red_vertices.size()) ==
            2 * split.red_edges);
      CHECK(static_cast<int>(split.black_vertices.size() +
                             split.red_vertices.size()) == order);

      int d = discrepancy(g, m);
      CHECK(d % 2 == 0);
      CHECK(d <= 2 * n);

      auto [cb, cr] =
          cross_colour_counts(g, split.black_vertices, split.red_vertices);
      CHECK(cb + cr == 4L * split.black_edges * split.red_edges);

      // conservation: induced counts on both sides plus cross counts per
      // colour add up to the graph totals
      auto [ib, ir] = induced_colour_counts(g, split.black_vertices);
      auto [jb, jr] = induced_colour_counts(g, split.red_vertices);
      CHECK(ib + jb + cb == g.per_colour_total());
      CHECK(ir + jr + cr == g.per_colour_total());
    }
  }
}
