#include "zsm/balance.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "zsm/io.hpp"

namespace zsm {

namespace {

const std::array<const char*, 12> kCaseLabels = {
    "1",
    "2.1",
    "2.2",
    "3.1",
    "3.2.1",
    "3.2.2.1",
    "3.2.2.2.1",
    "3.2.2.2.2.1",
    "3.2.2.2.2.2.1",
    "3.2.2.2.2.2.2.1",
    "3.2.2.2.2.2.2.2.1",
    "3.2.2.2.2.2.2.2.2",
};

std::string forensics(const GraphView& g, const Matching& m) {
  std::ostringstream os;
  write_instance(os, g.graph());
  os << format_matching(m) << "\n";
  if (g.flipped()) os << "note: solver was running on the colour-flipped view\n";
  return os.str();
}

[[noreturn]] void violation(const GraphView& g, const Matching& m,
                            const std::string& what) {
  throw InvariantViolation(what, forensics(g, m));
}

void expect(bool ok, const GraphView& g, const Matching& m,
            const std::string& what) {
  if (!ok) violation(g, m, what);
}

// Lexicographically first z in `side` outside {u,v} whose edge to y has the
// wanted colour.
std::optional<Vertex> first_seeing_colour(const GraphView& g,
                                          const std::vector<Vertex>& side,
                                          Vertex u, Vertex v, Vertex y,
                                          Colour wanted) {
  for (Vertex z : side) {
    if (z == u || z == v) continue;
    if (g.colour_of(y, z) == wanted) return z;
  }
  return std::nullopt;
}

}  // namespace

bool valid_case_label(const std::string& label) {
  return std::find(kCaseLabels.begin(), kCaseLabels.end(), label) !=
         kCaseLabels.end();
}

std::pair<GraphView, bool> normalize_orientation(const ColouredGraph& g,
                                                 const Matching& m) {
  auto split = colour_split(GraphView(g), m);
  bool flip = split.red_edges > split.black_edges;
  return {GraphView(g, flip), flip};
}

CountingReport verify_counting_identities(const GraphView& g,
                                          const Matching& m, bool deep_case) {
  const long n = g.n();
  const auto split = colour_split(g, m);
  const auto [vb_black, vb_red] = induced_colour_counts(g, split.black_vertices);
  const auto [vr_black, vr_red] = induced_colour_counts(g, split.red_vertices);
  const auto [x_black, x_red] =
      cross_colour_counts(g, split.black_vertices, split.red_vertices);

  CountingReport rep;
  rep.n = static_cast<int>(n);
  rep.black_in_matching = split.black_edges;
  rep.red_in_matching = split.red_edges;
  rep.black_side_size = static_cast<int>(split.black_vertices.size());
  rep.red_side_size = static_cast<int>(split.red_vertices.size());
  rep.edges_in_black_side = vb_black + vb_red;
  rep.edges_in_red_side = vr_black + vr_red;
  rep.cross_total = x_black + x_red;
  rep.per_colour_total = vb_red + vr_red + x_red;
  rep.red_within_black_side = vb_red;
  rep.deep = deep_case;
  rep.red_cross = x_red;
  rep.black_cross = x_black;
  rep.red_side_monochromatic = (vr_black == 0);

  std::ostringstream bad;
  auto check = [&bad](bool ok, const char* what, long got, long want) {
    if (!ok) bad << what << ": got " << got << ", expected " << want << "; ";
  };
  check(rep.black_in_matching == n + 1, "black matching edges",
        rep.black_in_matching, n + 1);
  check(rep.red_in_matching == n - 1, "red matching edges",
        rep.red_in_matching, n - 1);
  check(rep.black_side_size == 2 * n + 2, "black side size",
        rep.black_side_size, 2 * n + 2);
  check(rep.red_side_size == 2 * n - 2, "red side size", rep.red_side_size,
        2 * n - 2);
  check(rep.edges_in_black_side == 2 * n * n + 3 * n + 1,
        "edges inside black side", rep.edges_in_black_side,
        2 * n * n + 3 * n + 1);
  check(rep.edges_in_red_side == 2 * n * n - 5 * n + 3,
        "edges inside red side", rep.edges_in_red_side, 2 * n * n - 5 * n + 3);
  check(rep.cross_total == 4 * n * n - 4, "cross edge total", rep.cross_total,
        4 * n * n - 4);
  check(rep.per_colour_total == 4 * n * n - n, "per-colour total",
        rep.per_colour_total, 4 * n * n - n);
  check(rep.red_within_black_side % 2 == 0,
        "red edges inside black side must be even", rep.red_within_black_side,
        rep.red_within_black_side + 1);
  if (deep_case) {
    check(rep.red_cross == 2 * n * n - 3, "red cross edges", rep.red_cross,
          2 * n * n - 3);
    check(rep.black_cross == 2 * n * n - 1, "black cross edges",
          rep.black_cross, 2 * n * n - 1);
    if (!rep.red_side_monochromatic) {
      bad << "red side is not monochromatic red; ";
    }
  }
  if (!bad.str().empty()) {
    violation(g, m, "counting identities failed: " + bad.str());
  }
  return rep;
}

namespace {

struct StepOutcome {
  Matching result;
  std::string label;
  std::vector<SwapQuad> swaps;
};

// Cases 2.1 and 3.1: the black side induces only black edges, so the colour
// balance of the whole graph forces a red majority among cross edges, and a
// swap trading a black matching edge for a red one exists.
StepOutcome monochromatic_case(const GraphView& g, const Matching& m,
                               const ColourSplit& split, int d) {
  auto [x_black, x_red] =
      cross_colour_counts(g, split.black_vertices, split.red_vertices);
  expect(x_red > x_black, g, m,
         "monochromatic black side must force a red cross majority");
  auto quad = find_reducing_swap(g, m, Colour::black);
  expect(quad.has_value(), g, m,
         "red cross majority must yield a reducing swap");
  return {apply_swap(m, *quad), d > 2 ? "2.1" : "3.1", {*quad}};
}

StepOutcome discrepancy_two_case(const GraphView& g, const Matching& m,
                                 const ColourSplit& split) {
  const long n = g.n();
  const auto& vb = split.black_vertices;
  const auto& vr = split.red_vertices;

  auto [x_black, x_red] = cross_colour_counts(g, vb, vr);
  if (x_red > x_black) {
    auto quad = find_reducing_swap(g, m, Colour::black);
    expect(quad.has_value(), g, m,
           "red cross majority must yield a reducing swap");
    return {apply_swap(m, *quad), "3.2.1", {*quad}};
  }

  if (auto quad = find_mixed_quad(g, m, Colour::black,
                                  {Colour::red, Colour::black})) {
    return {apply_swap(m, *quad), "3.2.2.1", {*quad}};
  }

  // Red edges inside the black side now come in parallel pairs: for every
  // red ux with partners v, y, the edge vy is red too. Closed-form counts
  // hold from here on.
  verify_counting_identities(g, m, false);
  long red_in_vb = induced_colour_counts(g, vb).second;

  if (x_black == x_red) {
    // An odd number of black edges inside the red side guarantees a red
    // matching-edge pair (pq, rs) with pr red and qs black; swapping makes
    // the discrepancy 4, and the parallel red pair inside the black side
    // then finishes the job.
    long black_in_vr = induced_colour_counts(g, vr).first;
    expect(black_in_vr % 2 == 1, g, m,
           "equal cross counts must leave an odd black count in the red side");
    auto first = find_mixed_quad(g, m, Colour::red, {Colour::red, Colour::black});
    expect(first.has_value(), g, m,
           "odd black count in the red side must yield a mixed quadruple");
    Matching mid = apply_swap(m, *first);
    expect(discrepancy(g, mid) == 4, g, m,
           "mixed swap on the red side must raise the discrepancy to 4");
    auto second = find_parallel_red_pair(g, mid, {});
    expect(second.has_value(), g, mid,
           "a parallel red pair must survive the red-side swap");
    return {apply_swap(mid, *second), "3.2.2.2.1", {*first, *second}};
  }

  // Black cross majority; at least 4n red edges sit inside the black side.
  expect(red_in_vb >= 4 * n, g, m,
         "black cross majority needs at least 4n red edges in the black side");

  if (red_in_vb > 4 * n) {
    // A black-increasing swap exists; its black matching edge touches only
    // 4n of the red edges inside the black side, so a parallel red pair
    // avoiding it exists as well.
    auto first = find_reducing_swap(g, m, Colour::red);
    expect(first.has_value(), g, m,
           "black cross majority must yield a black-increasing swap");
    auto second = find_parallel_red_pair(g, m, {first->x, first->y});
    expect(second.has_value(), g, m,
           "more than 4n red edges must leave a parallel pair clear of the "
           "swapped black edge");
    Matching mid = apply_swap(m, *first);
    expect(discrepancy(g, mid) == 4, g, m,
           "black-increasing swap must raise the discrepancy to 4");
    return {apply_swap(mid, *second), "3.2.2.2.2.1", {*first, *second}};
  }

  // Exactly 4n red edges inside the black side; the red side is forced
  // monochromatic and the cross counts are pinned.
  verify_counting_identities(g, m, true);

  if (auto quad = find_reducing_swap(g, m, Colour::black)) {
    return {apply_swap(m, *quad), "3.2.2.2.2.2.1", {*quad}};
  }

  // No pair of differently coloured matching edges is reducible. The cross
  // counts only fit one variety profile: a single v2 pair, every other pair
  // v3. Orient the v2 pair so that ux is its unique red cross edge.
  std::vector<Edge> black_edges, red_edges;
  for (const auto& e : m.edges()) {
    (g.colour_of(e.first, e.second) == Colour::black ? black_edges : red_edges)
        .push_back(e);
  }
  int v2_count = 0;
  Edge v2_black{-1, -1}, v2_red{-1, -1};
  for (const auto& be : black_edges) {
    for (const auto& re : red_edges) {
      auto cls = classify_pair(g, m, be, re);
      if (cls.variety == PairVariety::v2) {
        ++v2_count;
        v2_black = be;
        v2_red = re;
      } else if (cls.variety != PairVariety::v3) {
        violation(g, m,
                  "non-reducible profile admits only varieties v2 and v3");
      }
    }
  }
  expect(v2_count == 1, g, m,
         "non-reducible profile must contain exactly one v2 pair");

  Vertex u = -1, x = -1;
  for (Vertex a : {v2_black.first, v2_black.second}) {
    for (Vertex c : {v2_red.first, v2_red.second}) {
      if (g.colour_of(a, c) == Colour::red) {
        u = a;
        x = c;
      }
    }
  }
  expect(u != -1, g, m, "v2 pair must carry exactly one red cross edge");
  const Vertex v = m.partner(u);
  const Vertex y = m.partner(x);

  if (auto pair = find_parallel_red_pair(g, m, {u, v})) {
    // A red edge clear of uv: open up with the all-black swap, then trade
    // two black matching edges for the parallel red pair.
    SwapQuad first{u, v, y, x};
    Matching mid = apply_swap(m, first);
    expect(discrepancy(g, mid) == 4, g, m,
           "all-black swap must raise the discrepancy to 4");
    return {apply_swap(mid, *pair), "3.2.2.2.2.2.2.1", {first, *pair}};
  }

  // Every red edge inside the black side touches u or v, hence every edge
  // from u or v into the rest of the black side is red.
  for (Vertex z : vb) {
    if (z == u || z == v) continue;
    expect(g.colour_of(u, z) == Colour::red &&
               g.colour_of(v, z) == Colour::red,
           g, m, "all 4n red edges must be incident to the v2 black edge");
  }

  if (auto z = first_seeing_colour(g, vb, u, v, y, Colour::black)) {
    // y sees some z in the black side by a black edge: route through x-u
    // and then v-w / y-z with w the partner of z.
    const Vertex w = m.partner(*z);
    SwapQuad first{u, v, x, y};
    SwapQuad second{v, y, w, *z};
    Matching mid = apply_swap(m, first);
    expect(discrepancy(g, mid) == 2, g, m,
           "first swap of the black-z route must keep the discrepancy at 2");
    return {apply_swap(mid, second), "3.2.2.2.2.2.2.2.1", {first, second}};
  }

  // Every edge from y into the rest of the black side is red as well: open
  // with the all-black swap and close through up, yq on the least black
  // matching edge pq clear of {u,v}.
  std::optional<Edge> pq;
  for (const auto& e : black_edges) {
    if (e.first == u || e.first == v || e.second == u || e.second == v) {
      continue;
    }
    pq = e;
    break;
  }
  expect(pq.has_value(), g, m,
         "black side must contain a matching edge clear of the v2 pair");
  SwapQuad first{u, v, y, x};
  SwapQuad second{u, y, pq->first, pq->second};
  Matching mid = apply_swap(m, first);
  expect(discrepancy(g, mid) == 4, g, m,
         "all-black swap must raise the discrepancy to 4");
  return {apply_swap(mid, second), "3.2.2.2.2.2.2.2.2", {first, second}};
}

}  // namespace

std::pair<Matching, StepRecord> step(const ColouredGraph& g, const Matching& m,
                                     int index) {
  if (m.order() != g.order()) {
    throw InputError(Errc::bad_matching,
                     "matching order does not match graph order");
  }
  auto [view, flipped] = normalize_orientation(g, m);
  const auto split = colour_split(view, m);
  const int d = split.black_edges - split.red_edges;
  if (d <= 0) {
    throw InputError(Errc::precondition,
                     "step requires a matching with positive discrepancy");
  }

  const GraphView& g_view = view;
  const bool monochromatic =
      induced_colour_counts(g_view, split.black_vertices).second == 0;
  StepOutcome out = [&]() -> StepOutcome {
    if (monochromatic) return monochromatic_case(g_view, m, split, d);
    if (d > 2) {
      auto hit = find_red_edge_in_black_side(g_view, m);
      expect(hit.has_value(), g_view, m,
             "non-monochromatic black side must contain a red edge");
      SwapQuad quad{hit->u, hit->v, hit->x, hit->y};
      return {apply_swap(m, quad), "2.2", {quad}};
    }
    return discrepancy_two_case(g_view, m, split);
  }();

  const int d_after = discrepancy(view, out.result);
  expect(d_after >= 0 && d_after < d, view, m,
         "step must strictly decrease the discrepancy");
  expect(d - d_after == 2 || d - d_after == 4, view, m,
         "step must decrease the discrepancy by exactly 2 or 4");
  if (d == 2) {
    expect(d_after == 0, view, m,
           "a discrepancy-2 step must finish at zero");
  }

  StepRecord rec;
  rec.index = index;
  rec.case_label = out.label;
  rec.swaps = out.swaps;
  rec.discrepancy_before = d;
  rec.discrepancy_after = d_after;
  rec.colour_flip = flipped;
  return {out.result, rec};
}

Trace balance(const ColouredGraph& g, std::optional<Matching> start) {
  Matching m = start ? std::move(*start) : Matching::canonical(g.order());
  if (m.order() != g.order()) {
    throw InputError(Errc::bad_matching,
                     "matching order does not match graph order");
  }
  Trace trace{m, {}, m};
  int index = 0;
  while (discrepancy(GraphView(g), m) > 0) {
    if (index >= g.n()) {
      violation(GraphView(g), trace.initial,
                "solver exceeded the n-step budget");
    }
    auto [next, rec] = step(g, m, index);
    m = std::move(next);
    trace.steps.push_back(std::move(rec));
    ++index;
  }
  trace.final_matching = m;
  return trace;
}

std::optional<std::string> check_trace(const ColouredGraph& g,
                                       const Trace& trace) {
  if (trace.initial.order() != g.order()) {
    return "initial matching order does not match the instance";
  }
  Matching m = trace.initial;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& rec = trace.steps[i];
    const std::string at = " at step " + std::to_string(i);
    if (rec.index != static_cast<int>(i)) return "step index mismatch" + at;
    if (!valid_case_label(rec.case_label)) return "unknown case label" + at;
    if (rec.swaps.empty() || rec.swaps.size() > 2) {
      return "step must apply one or two swaps" + at;
    }
    if (discrepancy(GraphView(g), m) != rec.discrepancy_before) {
      return "replay mismatch" + at + ": recorded discrepancy before is " +
             std::to_string(rec.discrepancy_before) + ", replay has " +
             std::to_string(discrepancy(GraphView(g), m));
    }
    for (const auto& q : rec.swaps) {
      Matching next = apply_swap(m, q);
      if (next == m) {
        return "replay mismatch" + at + ": swap (" + std::to_string(q.u) +
               "," + std::to_string(q.v) + "," + std::to_string(q.x) + "," +
               std::to_string(q.y) + ") does not apply";
      }
      m = std::move(next);
    }
    const int d_after = discrepancy(GraphView(g), m);
    if (d_after != rec.discrepancy_after) {
      return "replay mismatch" + at + ": recorded discrepancy after is " +
             std::to_string(rec.discrepancy_after) + ", replay has " +
             std::to_string(d_after);
    }
    const int drop = rec.discrepancy_before - d_after;
    if (d_after >= rec.discrepancy_before || (drop != 2 && drop != 4)) {
      return "step contract violated" + at;
    }
  }
  if (!(m == trace.final_matching)) {
    return "final matching does not match the replay";
  }
  if (discrepancy(GraphView(g), m) != 0) {
    return "final matching is not balanced";
  }
  return std::nullopt;
}

}  // namespace zsm
