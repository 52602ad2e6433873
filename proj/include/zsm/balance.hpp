#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsm/graph.hpp"
#include "zsm/swap.hpp"

namespace zsm {

// One iteration of the solver: which case fired, the swaps applied (one or
// two), and the endpoint discrepancies. colour_flip records whether the
// iteration ran on the colour-exchanged view of the graph.
struct StepRecord {
  int index = 0;
  std::string case_label;
  std::vector<SwapQuad> swaps;
  int discrepancy_before = 0;
  int discrepancy_after = 0;
  bool colour_flip = false;
};

struct Trace {
  Matching initial;
  std::vector<StepRecord> steps;
  Matching final_matching;
};

bool valid_case_label(const std::string& label);

// View of g under which the matching has at least as many black edges as
// red ones; the flag reports whether the colours were exchanged. Ties break
// toward the identity view.
std::pair<GraphView, bool> normalize_orientation(const ColouredGraph& g,
                                                 const Matching& m);

// Closed-form counts that must hold whenever the solver reaches the
// parallel-red-pair configuration at discrepancy 2 (case 3.2.2.2), plus the
// sharper set for its exactly-4n sub-branch. Throws InvariantViolation on
// any mismatch.
struct CountingReport {
  int n = 0;
  int black_in_matching = 0;          // n + 1
  int red_in_matching = 0;            // n - 1
  int black_side_size = 0;            // 2n + 2
  int red_side_size = 0;              // 2n - 2
  long edges_in_black_side = 0;       // 2n^2 + 3n + 1
  long edges_in_red_side = 0;         // 2n^2 - 5n + 3
  long cross_total = 0;               // 4n^2 - 4
  long per_colour_total = 0;          // 4n^2 - n
  long red_within_black_side = 0;     // even
  bool deep = false;
  long red_cross = 0;                 // deep: 2n^2 - 3
  long black_cross = 0;               // deep: 2n^2 - 1
  bool red_side_monochromatic = false;  // deep: true
};

CountingReport verify_counting_identities(const GraphView& g,
                                          const Matching& m,
                                          bool deep_case = false);

// One solver iteration. Requires discrepancy(g, m) > 0; returns a perfect
// matching with strictly smaller discrepancy (by exactly 2 or 4) and the
// record of what was done. Throws InvariantViolation if any structural
// claim the iteration relies on fails.
std::pair<Matching, StepRecord> step(const ColouredGraph& g, const Matching& m,
                                     int index = 0);

// Drives the matching to discrepancy zero. Starts from `start` if given,
// else from the canonical matching {(0,1),(2,3),...}. At most n steps.
Trace balance(const ColouredGraph& g,
              std::optional<Matching> start = std::nullopt);

// Independent replay of a trace against g: re-applies every swap, re-checks
// every record's contract and the chaining of matchings. Returns the first
// failure diagnostic, or nullopt if the trace is exact.
std::optional<std::string> check_trace(const ColouredGraph& g,
                                       const Trace& trace);

}  // namespace zsm
