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

#ifndef SPLITFLOW_HARNESS_HPP
#define SPLITFLOW_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "splitflow/metrics.hpp"
#include "splitflow/splitter.hpp"
#include "splitflow/traffic.hpp"
#include "splitflow/types.hpp"
#include "splitflow/weights.hpp"

namespace splitflow {

/// Traffic selector for experiment runs. U and T force the generator's
/// class mix to 1 and 0; Mixed keeps the template's mix (which must then be
/// strictly between 0 and 1).
enum class TrafficSelector : std::uint8_t { U, T, Mixed };

std::string to_string(TrafficSelector selector);

struct Scenario {
  RoutingWeightVector weights;
  SplitterKind algorithm = SplitterKind::Pwfr;
  RrMode rr_mode = RrMode::PureCyclic;
  TrafficConfig traffic;
  std::string label;
};

struct DecisionRecord {
  std::uint64_t seq = 0;
  std::optional<CallId> call_id;
  TrafficClass traffic_class = TrafficClass::Connectionless;
  std::uint32_t size = 0;
  PathId path{1};
};

struct RunResult {
  std::string label;
  SplitterKind algorithm = SplitterKind::Pwfr;
  std::string traffic_class;  // "U", "T" or "Mixed"
  std::vector<double> weights;
  double msd = 0.0;
  double max_abs_dev = 0.0;
  std::vector<std::uint64_t> per_path_bytes;
  std::vector<std::uint64_t> per_path_packets;
  std::vector<std::uint64_t> per_path_calls;
  std::uint64_t total_packets = 0;
  // Deviation split by traffic class; NaN when the class is absent.
  double msd_connectionless = 0.0;
  double msd_connection_oriented = 0.0;
};

/// Replays a trace through a fresh splitter for the scenario, recording
/// every packet decision. Optionally appends per-packet decisions to `log`.
/// Throws IncompatibleTrafficError when a call-only splitter meets a
/// connectionless packet.
RunResult replay(const Scenario& scenario, const Trace& trace,
                 std::vector<DecisionRecord>* log = nullptr);

/// generate(scenario.traffic) + replay. Deterministic for a fixed scenario.
RunResult run_scenario(const Scenario& scenario,
                       std::vector<DecisionRecord>* log = nullptr);

/// The 3-path weight sweep: p3 = 0, p2 = 1 - p1, p1 walks the grid. One
/// trace per traffic selector (derived from the template seed) is shared by
/// every algorithm and grid point, so curves compare identical traffic.
struct SweepSpec {
  std::vector<double> p1_grid;  // values in [0.001, 0.5]
  std::vector<SplitterKind> algorithms;
  std::vector<TrafficSelector> traffic_classes;
  TrafficConfig traffic;
  RrMode rr_mode = RrMode::PureCyclic;
  std::string label_prefix = "sweep";
};

/// Default p1 grid: 0.001, then 0.05 steps up to 0.50.
std::vector<double> default_p1_grid();

/// Throws ConfigError for out-of-range grid values or an unusable template.
/// Results come back sorted by label.
std::vector<RunResult> run_sweep(const SweepSpec& spec);

/// Wider-topology runs with seeded random weight vectors: draws `n_paths`
/// nonnegative weights, normalizes them, and runs every algorithm x class
/// combination on shared per-class traces. The drawn weights are recorded in
/// the results.
std::vector<RunResult> random_weight_run(
    std::uint32_t n_paths, std::uint64_t seed,
    const std::vector<SplitterKind>& algorithms,
    const std::vector<TrafficSelector>& traffic_classes,
    const TrafficConfig& traffic_template, RrMode rr_mode = RrMode::PureCyclic,
    const std::string& label_prefix = "random");

/// CSV row layout:
///   label,algorithm,traffic,p1..pN,msd,max_abs_dev,bytes_1..bytes_N
/// Header row always present; numbers carry full double precision. All
/// results in one table must share the same path count.
void write_results_csv(std::ostream& out, const std::vector<RunResult>& results);

/// Decision log rows: seq,call_id|-,class,path (header included).
void write_decision_log(std::ostream& out,
                        const std::vector<DecisionRecord>& log);

}  // namespace splitflow

#endif  // SPLITFLOW_HARNESS_HPP
