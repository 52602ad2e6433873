#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "zsm/balance.hpp"
#include "zsm/generate.hpp"
#include "zsm/io.hpp"
#include "zsm/oracle.hpp"

using namespace zsm;

namespace {

Matching m8() {
  return Matching::from_pairs(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
}

// One step from a fixture: check the case label, the exact swaps, the
// discrepancy endpoints and the final edges.
void check_step(const ColouredGraph& g, const Matching& start,
                const std::string& label, const std::vector<SwapQuad>& swaps,
                const std::vector<Edge>& final_edges, bool flip = false) {
  CAPTURE(label);
  auto [result, rec] = step(g, start);
  CHECK(rec.case_label == label);
  CHECK(rec.swaps == swaps);
  CHECK(rec.discrepancy_before == discrepancy(GraphView(g), start));
  CHECK(rec.discrepancy_after == discrepancy(GraphView(g), result));
  CHECK(rec.colour_flip == flip);
  CHECK(result.edges() == final_edges);
}

}  // namespace

TEST_CASE("normalize_orientation flips only on a red majority") {
  auto g2 = fixtures::g2();
  CHECK(!normalize_orientation(g2, Matching::from_pairs(4, {{0, 1}, {2, 3}}))
             .second);
  auto flipped =
      normalize_orientation(g2, Matching::from_pairs(4, {{0, 3}, {1, 2}}));
  CHECK(flipped.second);
  CHECK(colour_split(flipped.first,
                     Matching::from_pairs(4, {{0, 3}, {1, 2}}))
            .black_edges == 2);
  // ties break toward the identity view
  auto g1 = fixtures::g1();
  CHECK(!normalize_orientation(g1, Matching::from_pairs(4, {{0, 1}, {2, 3}}))
             .second);
}

TEST_CASE("step on the small fixtures") {
  auto g2 = fixtures::g2();
  check_step(g2, Matching::from_pairs(4, {{0, 1}, {2, 3}}), "3.2.2.1",
             {{1, 0, 3, 2}}, {{0, 2}, {1, 3}});

  // same instance through the colour-exchanged view
  check_step(g2, Matching::from_pairs(4, {{0, 3}, {1, 2}}), "3.2.2.1",
             {{0, 3, 2, 1}}, {{0, 2}, {1, 3}}, true);

  auto g3 = fixtures::g3();
  check_step(g3, m8(), "2.2", {{0, 1, 5, 4}},
             {{0, 5}, {1, 4}, {2, 3}, {6, 7}});

  CHECK_THROWS_AS(step(g2, Matching::from_pairs(4, {{0, 2}, {1, 3}})),
                  InputError);
}

TEST_CASE("case 2.2 decreases by 2 when the partner edge is black") {
  auto g = fixtures::two_two_black_branch();
  auto [m1, rec1] = step(g, m8());
  CHECK(rec1.case_label == "2.2");
  CHECK(rec1.swaps == std::vector<SwapQuad>{{1, 0, 2, 3}});
  CHECK(rec1.discrepancy_before == 4);
  CHECK(rec1.discrepancy_after == 2);

  auto trace = balance(g, m8());
  CHECK(trace.steps.size() == 2);
  CHECK(trace.steps[0].case_label == "2.2");
  CHECK(trace.steps[1].case_label == "3.2.2.1");
  CHECK(discrepancy(GraphView(g), trace.final_matching) == 0);
}

TEST_CASE("monochromatic cases 2.1 and 3.1") {
  auto g = fixtures::mono_order20();
  auto trace = balance(g);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].case_label == "2.1");
  CHECK(trace.steps[0].swaps == std::vector<SwapQuad>{{0, 1, 14, 15}});
  CHECK(trace.steps[0].discrepancy_before == 4);
  CHECK(trace.steps[0].discrepancy_after == 2);
  CHECK(trace.steps[1].case_label == "3.1");
  CHECK(trace.steps[1].swaps == std::vector<SwapQuad>{{2, 3, 16, 17}});
  CHECK(discrepancy(GraphView(g), trace.final_matching) == 0);
}

TEST_CASE("deep fixtures reach every discrepancy-2 branch") {
  check_step(fixtures::deep_fig6(), m8(), "3.2.2.2.2.2.2.2.2",
             {{0, 1, 7, 6}, {0, 7, 2, 3}},
             {{0, 2}, {1, 6}, {3, 7}, {4, 5}});
  check_step(fixtures::deep_fig5(), m8(), "3.2.2.2.2.2.2.2.1",
             {{0, 1, 6, 7}, {1, 7, 3, 2}},
             {{0, 6}, {1, 3}, {2, 7}, {4, 5}});
  check_step(fixtures::deep_avoid_uv(), m8(), "3.2.2.2.2.2.2.1",
             {{0, 1, 7, 6}, {2, 3, 4, 5}},
             {{0, 7}, {1, 6}, {2, 4}, {3, 5}});
  check_step(fixtures::deep_reducible(), m8(), "3.2.2.2.2.2.1",
             {{4, 5, 7, 6}}, {{0, 1}, {2, 3}, {4, 7}, {5, 6}});
  check_step(fixtures::deep_more_than_4n(), m8(), "3.2.2.2.2.1",
             {{6, 7, 1, 0}, {2, 3, 4, 5}},
             {{0, 7}, {1, 6}, {2, 4}, {3, 5}});
  check_step(fixtures::deep_equal_cross(),
             Matching::canonical(12), "3.2.2.2.1",
             {{9, 8, 11, 10}, {0, 1, 2, 3}},
             {{0, 2}, {1, 3}, {4, 5}, {6, 7}, {8, 10}, {9, 11}});
  // the deepest branch again at n = 3
  check_step(fixtures::deep_fig6_n3(), Matching::canonical(12),
             "3.2.2.2.2.2.2.2.2", {{0, 1, 9, 8}, {0, 9, 2, 3}},
             {{0, 2}, {1, 8}, {3, 9}, {4, 5}, {6, 7}, {10, 11}});
}

TEST_CASE("deep fixtures under the colour-exchanged view") {
  // flipping every colour must leave labels and swaps unchanged, with the
  // flip flag set
  auto flipped_colours = [](const ColouredGraph& g) {
    std::string s = g.colour_string();
    for (char& c : s) c = (c == 'B') ? 'R' : 'B';
    return ColouredGraph::from_colour_string(g.order(), s);
  };
  auto g = flipped_colours(fixtures::deep_fig6());
  auto [result, rec] = step(g, m8());
  CHECK(rec.case_label == "3.2.2.2.2.2.2.2.2");
  CHECK(rec.colour_flip);
  CHECK(rec.swaps == std::vector<SwapQuad>{{0, 1, 7, 6}, {0, 7, 2, 3}});
  CHECK(discrepancy(GraphView(g), result) == 0);
}

TEST_CASE("counting identities on the deep fixtures") {
  auto g = fixtures::deep_fig6();
  auto rep = verify_counting_identities(GraphView(g), m8(), true);
  CHECK(rep.n == 2);
  CHECK(rep.black_in_matching == 3);
  CHECK(rep.edges_in_black_side == 15);  // 2n^2+3n+1 at n=2
  CHECK(rep.cross_total == 12);          // 4n^2-4 at n=2
  CHECK(rep.per_colour_total == 14);     // 4n^2-n at n=2
  CHECK(rep.red_within_black_side == 8);
  CHECK(rep.red_cross == 5);             // 2n^2-3
  CHECK(rep.black_cross == 7);           // 2n^2-1
  CHECK(rep.red_side_monochromatic);

  // per-colour total at n=1
  auto g1 = fixtures::g1();
  CHECK(g1.per_colour_total() == 3);

  // a state outside the deep configuration must be rejected
  CHECK_THROWS_AS(
      verify_counting_identities(GraphView(g1),
                                 Matching::from_pairs(4, {{0, 1}, {2, 3}})),
      InvariantViolation);
  try {
    verify_counting_identities(GraphView(g1),
                               Matching::from_pairs(4, {{0, 1}, {2, 3}}));
  } catch (const InvariantViolation& e) {
    CHECK(e.forensics().find("zsm v1") != std::string::npos);
    CHECK(e.forensics().find("matching 0-1 2-3") != std::string::npos);
  }
}

TEST_CASE("balance on the fixture examples") {
  auto g1 = fixtures::g1();
  auto t1 = balance(g1, Matching::from_pairs(4, {{0, 1}, {2, 3}}));
  CHECK(t1.steps.empty());
  CHECK(t1.final_matching == Matching::from_pairs(4, {{0, 1}, {2, 3}}));

  auto g2 = fixtures::g2();
  auto t2 = balance(g2, Matching::from_pairs(4, {{0, 1}, {2, 3}}));
  CHECK(t2.steps.size() == 1);
  CHECK(t2.final_matching == Matching::from_pairs(4, {{0, 2}, {1, 3}}));

  auto g3 = fixtures::g3();
  auto t3 = balance(g3, Matching::from_pairs(8, {{0, 4}, {1, 5}, {2, 3},
                                                 {6, 7}}));
  CHECK(t3.steps.size() <= 2);
  CHECK(discrepancy(GraphView(g3), t3.final_matching) == 0);
  auto oracle = exists_balanced_matching(g3);
  REQUIRE(oracle.has_value());
}

TEST_CASE("balance defaults to the canonical start") {
  auto g2 = fixtures::g2();
  auto t = balance(g2);
  CHECK(t.initial == Matching::canonical(4));
  CHECK(t.final_matching == Matching::from_pairs(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("trace invariants and determinism over a random corpus") {
  for (int n : {1, 2, 3}) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto g = random_balanced_colouring(n, seed);
      auto start = random_matching(4 * n, seed + 999);
      auto trace = balance(g, start);

      CHECK(static_cast<int>(trace.steps.size()) <= n);
      Matching replay = trace.initial;
      for (const auto& rec : trace.steps) {
        CHECK(rec.discrepancy_before - rec.discrepancy_after >= 2);
        CHECK(rec.discrepancy_before - rec.discrepancy_after <= 4);
        CHECK(rec.discrepancy_before % 2 == 0);
        CHECK(rec.discrepancy_after % 2 == 0);
        CHECK(rec.discrepancy_after >= 0);
        for (const auto& q : rec.swaps) replay = apply_swap(replay, q);
      }
      CHECK(replay == trace.final_matching);
      CHECK(discrepancy(GraphView(g), trace.final_matching) == 0);
      CHECK(!check_trace(g, trace).has_value());

      // byte-identical traces on identical inputs
      std::ostringstream a, b;
      write_trace(a, trace);
      write_trace(b, balance(g, start));
      CHECK(a.str() == b.str());
    }
  }
}

TEST_CASE("check_trace rejects tampering") {
  auto g2 = fixtures::g2();
  auto trace = balance(g2, Matching::from_pairs(4, {{0, 1}, {2, 3}}));
  REQUIRE(trace.steps.size() == 1);

  auto tampered = trace;
  tampered.steps[0].swaps[0] = {0, 2, 1, 3};  // 02 is not a matching edge
  auto err = check_trace(g2, tampered);
  REQUIRE(err.has_value());
  CHECK(err->find("replay mismatch at step 0") != std::string::npos);

  auto wrong_d = trace;
  wrong_d.steps[0].discrepancy_before = 4;
  CHECK(check_trace(g2, wrong_d).has_value());

  auto wrong_final = trace;
  wrong_final.final_matching = Matching::from_pairs(4, {{0, 3}, {1, 2}});
  CHECK(check_trace(g2, wrong_final).has_value());

  auto bad_label = trace;
  bad_label.steps[0].case_label = "9.9";
  CHECK(check_trace(g2, bad_label).has_value());
}
