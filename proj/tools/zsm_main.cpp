#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zsm/balance.hpp"
#include "zsm/generate.hpp"
#include "zsm/graph.hpp"
#include "zsm/io.hpp"
#include "zsm/oracle.hpp"
#include "zsm/swap.hpp"

namespace {

using namespace zsm;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInvariant = 2;  // reserved for InvariantViolation
constexpr int kExitIo = 3;

ColouredGraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file: " + path);
  return read_instance(in);
}

Matching load_matching(const std::string& path, int order) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matching file: " + path);
  return read_matching(in, order);
}

void store_trace(const std::string& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open trace file for writing: " + path);
  write_trace(out, trace);
  if (!out) throw IoError("failed writing trace file: " + path);
}

bool oracle_confirms_balanced(const ColouredGraph& g, const Matching& m) {
  bool confirmed = false;
  for_each_perfect_matching(g.order(), [&](const Matching& cand) {
    if (cand == m) {
      confirmed = discrepancy(GraphView(g), cand) == 0;
      return false;
    }
    return true;
  });
  return confirmed;
}

struct RunStats {
  std::map<std::string, long> case_counts;
  long runs = 0;
  long balanced = 0;
  long oracle_agreed = 0;
  long traces_ok = 0;
  long total_steps = 0;
  int max_steps = 0;

  // Returns false if the run produced an unbalanced matching or a trace
  // that fails replay.
  bool record(const ColouredGraph& g, const Trace& trace, bool with_oracle) {
    ++runs;
    total_steps += static_cast<long>(trace.steps.size());
    max_steps = std::max(max_steps, static_cast<int>(trace.steps.size()));
    for (const auto& rec : trace.steps) ++case_counts[rec.case_label];
    bool ok = true;
    if (discrepancy(GraphView(g), trace.final_matching) == 0) {
      ++balanced;
    } else {
      ok = false;
    }
    if (!check_trace(g, trace)) {
      ++traces_ok;
    } else {
      ok = false;
    }
    if (with_oracle) {
      if (oracle_confirms_balanced(g, trace.final_matching)) {
        ++oracle_agreed;
      } else {
        ok = false;
      }
    }
    return ok;
  }

  void print_cases(std::ostream& out) const {
    for (const auto& [label, count] : case_counts) {
      out << "case " << label << " count " << count << "\n";
    }
  }
};

int cmd_solve(const std::string& instance_path,
              const std::optional<std::string>& matching_path,
              const std::optional<std::uint64_t>& seed,
              const std::optional<std::string>& trace_path) {
  ColouredGraph g = load_instance(instance_path);
  std::optional<Matching> start;
  if (matching_path) {
    start = load_matching(*matching_path, g.order());
  } else if (seed) {
    start = random_matching(g.order(), *seed);
  }
  Trace trace = balance(g, start);
  if (trace_path) store_trace(*trace_path, trace);
  std::cout << format_matching(trace.final_matching) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& instance_path,
               const std::string& matching_path,
               const std::optional<std::string>& trace_path) {
  ColouredGraph g = load_instance(instance_path);
  Matching m = load_matching(matching_path, g.order());
  auto split = colour_split(GraphView(g), m);
  if (split.black_edges != split.red_edges) {
    std::cerr << "error: unbalanced: b=" << split.black_edges
              << " r=" << split.red_edges << "\n";
    return kExitBadInput;
  }
  if (trace_path) {
    std::ifstream in(*trace_path);
    if (!in) throw IoError("cannot open trace file: " + *trace_path);
    Trace trace = read_trace(in, g.order());
    if (auto err = check_trace(g, trace)) {
      std::cerr << "error: " << *err << "\n";
      return kExitBadInput;
    }
    if (!(trace.final_matching == m)) {
      std::cerr << "error: trace final matching differs from the matching "
                   "under verification\n";
      return kExitBadInput;
    }
  }
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_exhaust(int order, long samples, std::uint64_t seed) {
  if (order != 4 && order != 8 && order != 12 && order != 16) {
    std::cerr << "error: exhaust supports orders 4, 8, 12, 16 (enumeration "
                 "cap)\n";
    return kExitBadInput;
  }
  RunStats stats;
  long failures = 0;
  if (order == 4) {
    std::vector<Matching> starts;
    for_each_perfect_matching(4, [&](const Matching& m) {
      starts.push_back(m);
      return true;
    });
    for (const auto& g : enumerate_balanced_colourings(4)) {
      if (!exists_balanced_matching(g)) {
        // A balanced colouring always admits a balanced matching; an oracle
        // miss would falsify the solver's whole premise.
        std::cerr << "error: oracle found no balanced matching for instance "
                  << g.colour_string() << "\n";
        ++failures;
        continue;
      }
      for (const auto& start : starts) {
        if (!stats.record(g, balance(g, start), true)) ++failures;
      }
    }
    std::cout << "exhaust order=4 mode=exhaustive runs=" << stats.runs
              << " balanced=" << stats.balanced
              << " oracle_agreed=" << stats.oracle_agreed
              << " traces_ok=" << stats.traces_ok << " failures=" << failures
              << "\n";
  } else {
    const bool with_oracle = order <= 12;  // membership scan stays cheap
    const int n = order / 4;
    for (long i = 0; i < samples; ++i) {
      ColouredGraph g = random_balanced_colouring(n, seed + 2 * i);
      Matching random_start = random_matching(order, seed + 2 * i + 1);
      if (!stats.record(g, balance(g, std::nullopt), with_oracle)) ++failures;
      if (!stats.record(g, balance(g, random_start), with_oracle)) ++failures;
    }
    std::cout << "exhaust order=" << order << " mode=sampled samples="
              << samples << " seed=" << seed << " runs=" << stats.runs
              << " balanced=" << stats.balanced << " oracle_agreed="
              << (with_oracle ? std::to_string(stats.oracle_agreed)
                              : std::string("skipped"))
              << " traces_ok=" << stats.traces_ok << " failures=" << failures
              << "\n";
  }
  stats.print_cases(std::cout);
  std::cout << "steps max " << stats.max_steps << "\n";
  return failures == 0 ? kExitOk : kExitBadInput;
}

int cmd_stats(int n, long samples, std::uint64_t seed) {
  if (n < 1) {
    std::cerr << "error: n must be positive\n";
    return kExitBadInput;
  }
  auto t0 = std::chrono::steady_clock::now();
  RunStats stats;
  for (long i = 0; i < samples; ++i) {
    ColouredGraph g = random_balanced_colouring(n, seed + i);
    stats.record(g, balance(g, std::nullopt), false);
  }
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::cout << "stats n=" << n << " samples=" << samples << " seed=" << seed
            << " start=canonical\n";
  stats.print_cases(std::cout);
  double mean = stats.runs == 0
                    ? 0.0
                    : static_cast<double>(stats.total_steps) / stats.runs;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "steps mean %.4f max %d", mean,
                stats.max_steps);
  std::cout << buf << "\n";
  std::snprintf(buf, sizeof(buf), "runtime_ms %.1f", ms);
  std::cout << buf << "\n";
  return kExitOk;
}

int cmd_experiment_kcolour(int k, int n, long samples, std::uint64_t seed) {
  if (k < 2 || n < 1) {
    std::cerr << "error: need k >= 2 and n >= 1\n";
    return kExitBadInput;
  }
  if (2 * k * n > kMaxEnumerationOrder) {
    std::cerr << "error: order " << 2 * k * n
              << " exceeds the enumeration cap\n";
    return kExitBadInput;
  }
  std::cout << "experiment kcolour k=" << k << " n=" << n
            << " samples=" << samples << " seed=" << seed << "\n";
  long with = 0, without = 0;
  for (long i = 0; i < samples; ++i) {
    KColouredGraph g = random_k_colouring(k, n, seed + i);
    auto found = kcolour_balanced_matching(g);
    std::cout << "instance " << i << " colours " << g.colour_string()
              << " verdict ";
    if (found) {
      ++with;
      std::cout << format_matching(*found) << "\n";
    } else {
      ++without;
      std::cout << "none\n";
      // A negative finding is the interesting outcome: serialize in full.
      write_k_instance(std::cout, g);
    }
  }
  std::cout << "summary samples=" << samples << " with_balanced=" << with
            << " without=" << without << "\n";
  return kExitOk;
}

int cmd_experiment_decompose(int n, bool exhaustive) {
  if (n != 1 || !exhaustive) {
    std::cerr << "error: decompose experiment supports --n 1 --exhaustive\n";
    return kExitBadInput;
  }
  std::cout << "experiment decompose order=4 exhaustive\n";
  long yes = 0, no = 0;
  long index = 0;
  for (const auto& g : enumerate_balanced_colourings(4)) {
    auto factors = decompose_balanced(g);
    std::cout << "instance " << index++ << " colours " << g.colour_string()
              << " verdict ";
    if (factors) {
      ++yes;
      std::cout << "decomposable factors ";
      for (std::size_t i = 0; i < factors->size(); ++i) {
        if (i > 0) std::cout << ";";
        // strip the "matching " prefix for the factor list
        std::cout << format_matching((*factors)[i]).substr(9);
      }
      std::cout << "\n";
    } else {
      ++no;
      std::cout << "none\n";
      write_instance(std::cout, g);
    }
  }
  std::cout << "summary instances=" << (yes + no) << " decomposable=" << yes
            << " not_decomposable=" << no << "\n";
  return kExitOk;
}

int cmd_gen_random(int n, std::uint64_t seed) {
  write_instance(std::cout, random_balanced_colouring(n, seed));
  return kExitOk;
}

int cmd_gen_clique(int n, int s) {
  write_instance(std::cout, clique_split_colouring(n, s));
  return kExitOk;
}

int cmd_gen_kcolour(int k, int n, std::uint64_t seed) {
  write_k_instance(std::cout, random_k_colouring(k, n, seed));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced perfect matchings in 2-edge-coloured complete "
               "graphs: solver, verifier, oracles, generators"};
  app.require_subcommand(1);

  std::function<int()> action;

  // solve
  std::string instance_path, matching_path, trace_path;
  std::uint64_t seed = 0;
  auto* solve = app.add_subcommand(
      "solve", "find a colour-balanced perfect matching, with trace");
  solve->add_option("instance", instance_path, "instance file")->required();
  auto* opt_matching =
      solve->add_option("--matching", matching_path, "starting matching file");
  auto* opt_seed =
      solve->add_option("--seed", seed, "seeded random starting matching");
  auto* opt_canonical = solve->add_flag(
      "--canonical", "start from the canonical matching (default)");
  opt_matching->excludes(opt_seed)->excludes(opt_canonical);
  opt_seed->excludes(opt_canonical);
  solve->add_option("--trace", trace_path, "write the swap trace to a file");
  solve->callback([&]() {
    action = [&]() {
      return cmd_solve(
          instance_path,
          *opt_matching ? std::optional(matching_path) : std::nullopt,
          *opt_seed ? std::optional(seed) : std::nullopt,
          solve->count("--trace") ? std::optional(trace_path) : std::nullopt);
    };
  });

  // verify
  std::string verify_instance, verify_matching, verify_trace;
  auto* verify = app.add_subcommand(
      "verify", "re-check a matching and optionally replay its trace");
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("matching", verify_matching, "matching file")->required();
  verify->add_option("--trace", verify_trace, "trace file to replay");
  verify->callback([&]() {
    action = [&]() {
      return cmd_verify(verify_instance, verify_matching,
                        verify->count("--trace")
                            ? std::optional(verify_trace)
                            : std::nullopt);
    };
  });

  // exhaust
  int exhaust_order = 4;
  long exhaust_samples = 1000;
  std::uint64_t exhaust_seed = 0;
  auto* exhaust = app.add_subcommand(
      "exhaust", "regression sweep: exhaustive at order 4, sampled above");
  exhaust->add_option("--order", exhaust_order, "graph order (4, 8, 12, 16)")
      ->required();
  exhaust->add_option("--samples", exhaust_samples, "sample count");
  exhaust->add_option("--seed", exhaust_seed, "base seed");
  exhaust->callback([&]() {
    action = [&]() {
      return cmd_exhaust(exhaust_order, exhaust_samples, exhaust_seed);
    };
  });

  // stats
  int stats_n = 1;
  long stats_samples = 1000;
  std::uint64_t stats_seed = 0;
  auto* stats =
      app.add_subcommand("stats", "case and step statistics over a corpus");
  stats->add_option("--n", stats_n, "instance size parameter")->required();
  stats->add_option("--samples", stats_samples, "sample count");
  stats->add_option("--seed", stats_seed, "base seed");
  stats->callback([&]() {
    action = [&]() { return cmd_stats(stats_n, stats_samples, stats_seed); };
  });

  // experiment
  auto* experiment =
      app.add_subcommand("experiment", "open-problem probes (report only)");
  experiment->require_subcommand(1);
  int exp_k = 3, exp_n = 1;
  long exp_samples = 1000;
  std::uint64_t exp_seed = 0;
  auto* kcolour = experiment->add_subcommand(
      "kcolour", "search balanced matchings in k-coloured instances");
  kcolour->add_option("--k", exp_k, "colour count")->required();
  kcolour->add_option("--n", exp_n, "instance size parameter")->required();
  kcolour->add_option("--samples", exp_samples, "sample count");
  kcolour->add_option("--seed", exp_seed, "base seed");
  kcolour->callback([&]() {
    action = [&]() {
      return cmd_experiment_kcolour(exp_k, exp_n, exp_samples, exp_seed);
    };
  });
  int dec_n = 1;
  bool dec_exhaustive = false;
  auto* decompose = experiment->add_subcommand(
      "decompose", "search balanced 1-factorizations");
  decompose->add_option("--n", dec_n, "instance size parameter")->required();
  decompose->add_flag("--exhaustive", dec_exhaustive,
                      "sweep all balanced colourings");
  decompose->callback([&]() {
    action = [&]() { return cmd_experiment_decompose(dec_n, dec_exhaustive); };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "emit instances on stdout");
  gen->require_subcommand(1);
  int gen_n = 1, gen_s = 2, gen_k = 3;
  std::uint64_t gen_seed = 0;
  auto* gen_random =
      gen->add_subcommand("random", "uniform balanced colouring");
  gen_random->add_option("--n", gen_n, "instance size parameter")->required();
  gen_random->add_option("--seed", gen_seed, "seed");
  gen_random->callback([&]() {
    action = [&]() { return cmd_gen_random(gen_n, gen_seed); };
  });
  auto* gen_clique = gen->add_subcommand("clique", "black clique plus fill");
  gen_clique->add_option("--n", gen_n, "instance size parameter")->required();
  gen_clique->add_option("--s", gen_s, "clique size")->required();
  gen_clique->callback([&]() {
    action = [&]() { return cmd_gen_clique(gen_n, gen_s); };
  });
  auto* gen_kcolour = gen->add_subcommand("kcolour", "uniform k-colouring");
  gen_kcolour->add_option("--k", gen_k, "colour count")->required();
  gen_kcolour->add_option("--n", gen_n, "instance size parameter")->required();
  gen_kcolour->add_option("--seed", gen_seed, "seed");
  gen_kcolour->callback([&]() {
    action = [&]() { return cmd_gen_kcolour(gen_k, gen_n, gen_seed); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    return action();
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n"
              << e.forensics();
    return kExitInvariant;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
