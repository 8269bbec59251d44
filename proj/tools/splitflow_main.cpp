// Copyright 2026 The Splitflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// splitflow CLI: generate traces, replay scenarios, run experiment sweeps.
//
// Exit codes: 0 ok, 2 usage error, 3 I/O error, 4 incompatible traffic,
// 5 dominance check violation.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "splitflow/errors.hpp"
#include "splitflow/harness.hpp"
#include "splitflow/trace_io.hpp"
#include "splitflow/traffic.hpp"

namespace {

using namespace splitflow;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitIncompatible = 4;
constexpr int kExitCheckFailed = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrafficFlags {
  std::uint64_t packets = 100000;
  double mix = 0.5;
  std::uint64_t seed = 42;
  std::string size_dist = "uniform:64:1500";
  std::string bw_dist = "exp:64:640";
  std::string ppc_dist = "uniform:5:50";
  std::uint32_t max_calls = 32;
  std::string call_size_mode = "per-packet";
};

void add_traffic_flags(CLI::App* cmd, TrafficFlags& flags) {
  cmd->add_option("--packets", flags.packets, "Total packets to generate");
  cmd->add_option("--mix", flags.mix,
                  "Fraction of connectionless packets, in [0,1]");
  cmd->add_option("--seed", flags.seed, "Generator seed")
      ->envname("SPLITFLOW_SEED");
  cmd->add_option("--size-dist", flags.size_dist,
                  "Packet size distribution: fixed:V | uniform:LO:HI | "
                  "exp:MEAN:CAP");
  cmd->add_option("--bw-dist", flags.bw_dist,
                  "Call bandwidth distribution (same grammar)");
  cmd->add_option("--ppc-dist", flags.ppc_dist,
                  "Packets-per-call distribution (same grammar)");
  cmd->add_option("--max-calls", flags.max_calls, "Concurrent open call cap");
  cmd->add_option("--call-size-mode", flags.call_size_mode,
                  "per-packet | per-call packet sizing")
      ->check(CLI::IsMember({"per-packet", "per-call"}));
}

Dist parse_dist(const std::string& text, const char* flag) {
  const auto dist = Dist::parse(text);
  if (!dist) {
    throw UsageError(std::string(flag) + ": cannot parse '" + text +
                     "', expected fixed:V, uniform:LO:HI or exp:MEAN:CAP");
  }
  return *dist;
}

TrafficConfig to_config(const TrafficFlags& flags) {
  TrafficConfig config;
  config.class_mix = flags.mix;
  config.n_packets = flags.packets;
  config.seed = flags.seed;
  config.size_dist = parse_dist(flags.size_dist, "--size-dist");
  config.call_bandwidth_dist = parse_dist(flags.bw_dist, "--bw-dist");
  config.packets_per_call_dist = parse_dist(flags.ppc_dist, "--ppc-dist");
  config.max_concurrent_calls = flags.max_calls;
  config.call_size_mode = flags.call_size_mode == "per-call"
                              ? CallSizeMode::PerCall
                              : CallSizeMode::PerPacket;
  return config;
}

RoutingWeightVector parse_weights(const std::string& text) {
  std::vector<double> raw;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      raw.push_back(std::stod(field));
    } catch (const std::exception&) {
      throw UsageError("--weights: cannot parse '" + field + "'");
    }
  }
  return validate_weights(raw);
}

RrMode parse_rr_mode(const std::string& text) {
  if (text == "cyclic") return RrMode::PureCyclic;
  if (text == "weighted") return RrMode::WeightedCount;
  throw UsageError("--rr-mode: expected cyclic or weighted");
}

std::string traffic_label(const Trace& trace) {
  bool any_u = false;
  bool any_t = false;
  for (const TrafficEvent& event : trace.events) {
    if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
      (arrival->packet.traffic_class == TrafficClass::Connectionless
           ? any_u
           : any_t) = true;
    }
  }
  if (any_u && any_t) return "Mixed";
  return any_t ? "T" : "U";
}

void write_csv_output(const std::vector<RunResult>& results,
                      const std::string& out_path) {
  if (out_path.empty()) {
    write_results_csv(std::cout, results);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  write_results_csv(out, results);
  if (!out.good()) throw IoError("write to " + out_path + " failed");
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  TrafficFlags traffic;
  std::string output;
};

int run_gen(const GenOptions& options) {
  const TrafficConfig config = to_config(options.traffic);
  const Trace trace = generate(config);
  save_trace(trace, std::filesystem::path(options.output));

  std::uint64_t u_packets = 0;
  std::uint64_t t_packets = 0;
  std::uint64_t calls = 0;
  for (const TrafficEvent& event : trace.events) {
    if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
      (arrival->packet.traffic_class == TrafficClass::Connectionless
           ? u_packets
           : t_packets) += 1;
    } else if (std::holds_alternative<CallOpen>(event)) {
      ++calls;
    }
  }
  std::printf(
      "wrote %s: events=%zu packets=%llu connectionless=%llu "
      "connection_oriented=%llu calls=%llu\n",
      options.output.c_str(), trace.events.size(),
      static_cast<unsigned long long>(u_packets + t_packets),
      static_cast<unsigned long long>(u_packets),
      static_cast<unsigned long long>(t_packets),
      static_cast<unsigned long long>(calls));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// run

struct RunOptions {
  std::string algo;
  std::string weights;
  std::string rr_mode = "cyclic";
  std::string trace_path;
  std::string log_path;
  std::string label = "run";
  TrafficFlags traffic;
};

int run_run(const RunOptions& options) {
  const auto kind = splitter_kind_from_string(options.algo);
  if (!kind) {
    throw UsageError("--algo: unknown algorithm '" + options.algo + "'");
  }

  Scenario scenario;
  scenario.weights = parse_weights(options.weights);
  scenario.algorithm = *kind;
  scenario.rr_mode = parse_rr_mode(options.rr_mode);
  scenario.label = options.label;

  Trace trace;
  if (!options.trace_path.empty()) {
    trace = load_trace(std::filesystem::path(options.trace_path));
  } else {
    scenario.traffic = to_config(options.traffic);
    trace = generate(scenario.traffic);
  }

  std::vector<DecisionRecord> log;
  RunResult result =
      replay(scenario, trace, options.log_path.empty() ? nullptr : &log);
  result.traffic_class = traffic_label(trace);

  if (!options.log_path.empty()) {
    std::ofstream out(options.log_path, std::ios::binary);
    if (!out) {
      throw IoError("cannot open " + options.log_path + " for writing");
    }
    write_decision_log(out, log);
  }

  write_results_csv(std::cout, {result});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  int figure = 0;  // 0 = custom sweep
  std::vector<double> grid;
  std::string algos;
  std::string traffic_class = "U";
  std::string rr_mode = "cyclic";
  std::uint32_t n_seeds = 10;
  TrafficFlags traffic;
  std::string output;
  bool check = false;
};

struct FigurePreset {
  std::vector<SplitterKind> algorithms;  // [candidate, baseline]
  TrafficSelector selector;
  bool random_weights;  // 5-path seeded runs instead of the 3-path grid
};

FigurePreset preset_for(int figure) {
  switch (figure) {
    case 6:
      return {{SplitterKind::Pwfr, SplitterKind::Pgrr}, TrafficSelector::U,
              false};
    case 7:
      return {{SplitterKind::Cwfr, SplitterKind::Cgrr}, TrafficSelector::T,
              false};
    case 13:
      return {{SplitterKind::Mwfr, SplitterKind::Pwfr},
              TrafficSelector::Mixed, false};
    case 14:
      return {{SplitterKind::Mrr, SplitterKind::Pgrr}, TrafficSelector::Mixed,
              false};
    case 15:
      return {{SplitterKind::Mwfr, SplitterKind::Mrr}, TrafficSelector::Mixed,
              false};
    case 17:
      return {{SplitterKind::Pwfr, SplitterKind::Pgrr}, TrafficSelector::U,
              true};
    case 18:
      return {{SplitterKind::Cwfr, SplitterKind::Cgrr}, TrafficSelector::T,
              true};
    case 19:
      return {{SplitterKind::Mwfr, SplitterKind::Mrr}, TrafficSelector::Mixed,
              true};
    default:
      throw UsageError("--figure: unknown preset " + std::to_string(figure) +
                       ", expected one of 6,7,13,14,15,17,18,19");
  }
}

TrafficSelector parse_selector(const std::string& text) {
  if (text == "U" || text == "u") return TrafficSelector::U;
  if (text == "T" || text == "t") return TrafficSelector::T;
  if (text == "Mixed" || text == "mixed") return TrafficSelector::Mixed;
  throw UsageError("--class: expected U, T or Mixed");
}

double msd_of(const std::vector<RunResult>& results, SplitterKind kind,
              const std::string& label_part) {
  for (const RunResult& r : results) {
    if (r.algorithm == kind && r.label.find(label_part) != std::string::npos) {
      return r.msd;
    }
  }
  throw Error("missing result for " + to_string(kind) + " at " + label_part);
}

// Candidate must score strictly below baseline; at p1=0.5 a tie is allowed
// (the two active paths carry equal weight there).
int check_grid(const std::vector<RunResult>& results,
               const std::vector<double>& grid, SplitterKind candidate,
               SplitterKind baseline) {
  int violations = 0;
  for (double p1 : grid) {
    char key[32];
    std::snprintf(key, sizeof key, "p1=%.3f", p1);
    const double lhs = msd_of(results, candidate, key);
    const double rhs = msd_of(results, baseline, key);
    const bool ok = p1 == 0.5 ? lhs <= rhs : lhs < rhs;
    if (!ok) {
      ++violations;
      std::fprintf(stderr, "check violated at %s: %s=%.17g vs %s=%.17g\n", key,
                   to_string(candidate).c_str(), lhs,
                   to_string(baseline).c_str(), rhs);
    }
  }
  return violations;
}

int run_sweep_cmd(const SweepOptions& options) {
  const TrafficConfig tmpl = to_config(options.traffic);

  std::vector<SplitterKind> algorithms;
  TrafficSelector selector = TrafficSelector::U;
  bool random_weights = false;

  if (options.figure != 0) {
    const FigurePreset preset = preset_for(options.figure);
    algorithms = preset.algorithms;
    selector = preset.selector;
    random_weights = preset.random_weights;
  } else {
    if (options.algos.empty()) {
      throw UsageError("custom sweeps need --algos (or use --figure)");
    }
    std::stringstream in(options.algos);
    std::string name;
    while (std::getline(in, name, ',')) {
      const auto kind = splitter_kind_from_string(name);
      if (!kind) throw UsageError("--algos: unknown algorithm '" + name + "'");
      algorithms.push_back(*kind);
    }
    selector = parse_selector(options.traffic_class);
  }

  const std::string prefix =
      options.figure != 0 ? "fig" + std::to_string(options.figure) : "sweep";
  const RrMode rr_mode = parse_rr_mode(options.rr_mode);

  std::vector<RunResult> results;
  int violations = 0;

  if (random_weights) {
    // Wide-topology preset: 5 paths, one random weight vector per seed.
    for (std::uint32_t s = 0; s < options.n_seeds; ++s) {
      const std::uint64_t seed = options.traffic.seed + s;
      char label[64];
      std::snprintf(label, sizeof label, "%s/seed=%02u", prefix.c_str(), s);
      auto seed_results = random_weight_run(5, seed, algorithms, {selector},
                                            tmpl, rr_mode, label);
      if (options.check && algorithms.size() == 2) {
        const double lhs = msd_of(seed_results, algorithms[0], label);
        const double rhs = msd_of(seed_results, algorithms[1], label);
        if (!(lhs < rhs)) {
          ++violations;
          std::fprintf(stderr, "check violated at %s: %s=%.17g vs %s=%.17g\n",
                       label, to_string(algorithms[0]).c_str(), lhs,
                       to_string(algorithms[1]).c_str(), rhs);
        }
      }
      results.insert(results.end(), seed_results.begin(), seed_results.end());
    }
  } else {
    SweepSpec spec;
    spec.p1_grid = options.grid.empty() ? default_p1_grid() : options.grid;
    spec.algorithms = algorithms;
    spec.traffic_classes = {selector};
    spec.traffic = tmpl;
    spec.rr_mode = rr_mode;
    spec.label_prefix = prefix;
    results = run_sweep(spec);
    if (options.check) {
      if (algorithms.size() != 2) {
        throw UsageError("--check needs exactly two algorithms");
      }
      violations =
          check_grid(results, spec.p1_grid, algorithms[0], algorithms[1]);
    }
  }

  write_csv_output(results, options.output);
  if (options.check) {
    if (violations > 0) {
      std::fprintf(stderr, "dominance check FAILED at %d point(s)\n",
                   violations);
      return kExitCheckFailed;
    }
    std::fprintf(stderr, "dominance check passed\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitflow: weighted multipath traffic splitting experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key-value config file; flags override it");
  app.option_defaults()->always_capture_default();

  GenOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic trace file");
  add_traffic_flags(gen, gen_options.traffic);
  gen->add_option("-o,--output", gen_options.output, "Trace file to write")
      ->required();

  RunOptions run_options;
  CLI::App* run = app.add_subcommand("run", "Replay one scenario, print CSV");
  run->add_option("--algo", run_options.algo,
                  "pgrr | cgrr | mrr | pwfr | cwfr | mwfr")
      ->required();
  run->add_option("--weights", run_options.weights,
                  "Comma-separated routing weights, must sum to 1")
      ->required();
  run->add_option("--rr-mode", run_options.rr_mode,
                  "cyclic | weighted (round-robin family only)")
      ->check(CLI::IsMember({"cyclic", "weighted"}));
  auto* trace_opt =
      run->add_option("--trace", run_options.trace_path,
                      "Replay this trace file instead of generating traffic");
  run->add_option("--log-decisions", run_options.log_path,
                  "Write per-packet decisions to this CSV file");
  run->add_option("--label", run_options.label, "Label for the CSV row");
  add_traffic_flags(run, run_options.traffic);
  trace_opt->excludes("--packets", "--mix", "--size-dist", "--bw-dist",
                      "--ppc-dist", "--max-calls", "--call-size-mode");

  SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run an experiment sweep, print or write CSV");
  sweep->add_option("--figure", sweep_options.figure,
                    "Experiment preset: 6,7,13,14,15 (3-path grid) or "
                    "17,18,19 (5-path random weights)");
  sweep->add_option("--grid", sweep_options.grid,
                    "Custom p1 grid values in [0.001,0.5]")
      ->delimiter(',');
  sweep->add_option("--algos", sweep_options.algos,
                    "Comma-separated algorithms for a custom sweep");
  sweep->add_option("--class", sweep_options.traffic_class,
                    "Traffic class for a custom sweep: U | T | Mixed");
  sweep->add_option("--rr-mode", sweep_options.rr_mode,
                    "cyclic | weighted (round-robin family only)")
      ->check(CLI::IsMember({"cyclic", "weighted"}));
  sweep->add_option("--seeds", sweep_options.n_seeds,
                    "Seed count for the 5-path presets");
  sweep->add_flag("--check", sweep_options.check,
                  "Assert the preset's dominance ordering; exit 5 on "
                  "violation");
  sweep->add_option("-o,--output", sweep_options.output,
                    "CSV output file (default: stdout)");
  add_traffic_flags(sweep, sweep_options.traffic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_options);
    if (run->parsed()) return run_run(run_options);
    return run_sweep_cmd(sweep_options);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const WeightError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const IncompatibleTrafficError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIncompatible;
  } catch (const TraceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
