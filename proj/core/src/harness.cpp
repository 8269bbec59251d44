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

#include "splitflow/harness.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <variant>

#include "splitflow/errors.hpp"

namespace splitflow {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

std::string format_grid_value(double p1) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", p1);
  return buf;
}

TrafficConfig config_for(TrafficConfig tmpl, TrafficSelector selector,
                         std::uint64_t seed) {
  switch (selector) {
    case TrafficSelector::U:
      tmpl.class_mix = 1.0;
      break;
    case TrafficSelector::T:
      tmpl.class_mix = 0.0;
      break;
    case TrafficSelector::Mixed:
      if (!(tmpl.class_mix > 0.0 && tmpl.class_mix < 1.0)) {
        throw ConfigError("class_mix",
                          "Mixed runs need a class_mix strictly between 0 "
                          "and 1");
      }
      break;
  }
  tmpl.seed = seed;
  return tmpl;
}

}  // namespace

std::string to_string(TrafficSelector selector) {
  switch (selector) {
    case TrafficSelector::U: return "U";
    case TrafficSelector::T: return "T";
    case TrafficSelector::Mixed: return "Mixed";
  }
  return "?";
}

RunResult replay(const Scenario& scenario, const Trace& trace,
                 std::vector<DecisionRecord>* log) {
  const std::size_t n = scenario.weights.size();
  const auto splitter =
      make_splitter(scenario.algorithm, scenario.weights, scenario.rr_mode);

  DeviationAccumulator acc(n);
  DeviationAccumulator acc_u(n);
  DeviationAccumulator acc_t(n);

  RunResult result;
  result.label = scenario.label;
  result.algorithm = scenario.algorithm;
  result.weights.assign(scenario.weights.weights().begin(),
                        scenario.weights.weights().end());
  result.per_path_bytes.assign(n, 0);
  result.per_path_packets.assign(n, 0);
  result.per_path_calls.assign(n, 0);

  for (const TrafficEvent& event : trace.events) {
    const std::optional<PathId> chosen = splitter->on_event(event);

    if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
      const Packet& p = arrival->packet;
      assert(chosen.has_value());
      acc.record(scenario.weights, p.size, *chosen);
      if (p.traffic_class == TrafficClass::Connectionless) {
        acc_u.record(scenario.weights, p.size, *chosen);
      } else {
        acc_t.record(scenario.weights, p.size, *chosen);
      }
      result.per_path_bytes[chosen->offset()] += p.size;
      result.per_path_packets[chosen->offset()] += 1;
      if (log) {
        log->push_back(
            DecisionRecord{p.seq, p.call_id, p.traffic_class, p.size, *chosen});
      }
    } else if (const auto* open = std::get_if<CallOpen>(&event)) {
      // Packet-only splitters ignore calls; nothing to count for them.
      if (const auto path = splitter->call_path(open->call.id)) {
        result.per_path_calls[path->offset()] += 1;
      }
    }
  }

  result.total_packets = acc.packets();
  result.msd = acc.packets() > 0 ? acc.msd() : kNan;
  result.max_abs_dev = acc.max_abs_deviation();
  result.msd_connectionless = acc_u.packets() > 0 ? acc_u.msd() : kNan;
  result.msd_connection_oriented = acc_t.packets() > 0 ? acc_t.msd() : kNan;
  return result;
}

RunResult run_scenario(const Scenario& scenario,
                       std::vector<DecisionRecord>* log) {
  return replay(scenario, generate(scenario.traffic), log);
}

std::vector<double> default_p1_grid() {
  std::vector<double> grid{0.001};
  for (int i = 1; i <= 10; ++i) grid.push_back(0.05 * i);
  return grid;
}

std::vector<RunResult> run_sweep(const SweepSpec& spec) {
  for (double p1 : spec.p1_grid) {
    if (!(p1 >= 0.001 && p1 <= 0.5)) {
      throw ConfigError("p1_grid", "p1 grid values must lie in [0.001, 0.5]");
    }
  }
  validate_config(spec.traffic);

  std::vector<RunResult> results;
  results.reserve(spec.p1_grid.size() * spec.algorithms.size() *
                  spec.traffic_classes.size());

  for (std::size_t s = 0; s < spec.traffic_classes.size(); ++s) {
    const TrafficSelector selector = spec.traffic_classes[s];
    const TrafficConfig config = config_for(
        spec.traffic, selector,
        Prng::derive(spec.traffic.seed, static_cast<std::uint64_t>(selector)));
    const Trace trace = generate(config);

    for (double p1 : spec.p1_grid) {
      const double raw[3] = {p1, 1.0 - p1, 0.0};
      const RoutingWeightVector weights = validate_weights(raw);

      for (SplitterKind algorithm : spec.algorithms) {
        Scenario scenario{weights, algorithm, spec.rr_mode, config,
                          spec.label_prefix + "/p1=" + format_grid_value(p1) +
                              "/" + to_string(algorithm) + "/" +
                              to_string(selector)};
        RunResult result = replay(scenario, trace);
        result.traffic_class = to_string(selector);
        results.push_back(std::move(result));
      }
    }
  }

  std::sort(results.begin(), results.end(),
            [](const RunResult& a, const RunResult& b) { return a.label < b.label; });
  return results;
}

std::vector<RunResult> random_weight_run(
    std::uint32_t n_paths, std::uint64_t seed,
    const std::vector<SplitterKind>& algorithms,
    const std::vector<TrafficSelector>& traffic_classes,
    const TrafficConfig& traffic_template, RrMode rr_mode,
    const std::string& label_prefix) {
  if (n_paths < 2) {
    throw ConfigError("n_paths", "random weight runs need n_paths >= 2");
  }
  validate_config(traffic_template);

  Prng weight_prng(Prng::derive(seed, 0x77656967687473ULL));  // "weights"
  std::vector<double> raw(n_paths);
  for (double& w : raw) w = weight_prng.next_unit();
  const RoutingWeightVector weights = normalize_weights(raw);

  std::vector<RunResult> results;
  for (std::size_t s = 0; s < traffic_classes.size(); ++s) {
    const TrafficSelector selector = traffic_classes[s];
    const TrafficConfig config =
        config_for(traffic_template, selector,
                   Prng::derive(seed, 0x74726163ULL,
                                static_cast<std::uint64_t>(selector)));
    const Trace trace = generate(config);

    for (SplitterKind algorithm : algorithms) {
      Scenario scenario{weights, algorithm, rr_mode, config,
                        label_prefix + "/" + to_string(selector) + "/" +
                            to_string(algorithm)};
      RunResult result = replay(scenario, trace);
      result.traffic_class = to_string(selector);
      results.push_back(std::move(result));
    }
  }

  std::sort(results.begin(), results.end(),
            [](const RunResult& a, const RunResult& b) { return a.label < b.label; });
  return results;
}

void write_results_csv(std::ostream& out,
                       const std::vector<RunResult>& results) {
  const std::size_t n = results.empty() ? 0 : results.front().weights.size();

  std::string line = "label,algorithm,traffic";
  for (std::size_t i = 1; i <= n; ++i) line += ",p" + std::to_string(i);
  line += ",msd,max_abs_dev";
  for (std::size_t i = 1; i <= n; ++i) line += ",bytes_" + std::to_string(i);
  out << line << '\n';

  for (const RunResult& r : results) {
    assert(r.weights.size() == n);
    line.clear();
    line += r.label;
    line += ',';
    line += to_string(r.algorithm);
    line += ',';
    line += r.traffic_class;
    for (double w : r.weights) {
      line += ',';
      append_double(line, w);
    }
    line += ',';
    append_double(line, r.msd);
    line += ',';
    append_double(line, r.max_abs_dev);
    for (std::uint64_t bytes : r.per_path_bytes) {
      line += ',';
      line += std::to_string(bytes);
    }
    out << line << '\n';
  }
}

void write_decision_log(std::ostream& out,
                        const std::vector<DecisionRecord>& log) {
  out << "seq,call_id,class,path\n";
  for (const DecisionRecord& d : log) {
    out << d.seq << ',';
    if (d.call_id) {
      out << *d.call_id;
    } else {
      out << '-';
    }
    out << (d.traffic_class == TrafficClass::Connectionless ? ",U," : ",T,")
        << d.path.index() << '\n';
  }
}

}  // namespace splitflow
