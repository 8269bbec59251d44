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

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <variant>

#include "splitflow/errors.hpp"
#include "splitflow/harness.hpp"

using namespace splitflow;

namespace {

TrafficConfig small_traffic(double mix, std::uint64_t packets,
                            std::uint64_t seed) {
  TrafficConfig config;
  config.class_mix = mix;
  config.n_packets = packets;
  config.seed = seed;
  return config;
}

std::uint64_t trace_bytes(const Trace& trace) {
  std::uint64_t total = 0;
  for (const TrafficEvent& event : trace.events) {
    if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
      total += arrival->packet.size;
    }
  }
  return total;
}

const RunResult& find_result(const std::vector<RunResult>& results,
                             SplitterKind kind, const std::string& label_part) {
  for (const RunResult& r : results) {
    if (r.algorithm == kind && r.label.find(label_part) != std::string::npos) {
      return r;
    }
  }
  REQUIRE(false);
  return results.front();
}

}  // namespace

TEST_CASE("uniform weights and unit sizes spread packets evenly") {
  Scenario scenario;
  scenario.weights =
      validate_weights(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});
  scenario.algorithm = SplitterKind::Pwfr;
  scenario.traffic = small_traffic(1.0, 999, 11);
  scenario.traffic.size_dist = Dist::fixed(1);

  const RunResult result = run_scenario(scenario);
  CHECK(result.per_path_packets ==
        std::vector<std::uint64_t>{333, 333, 333});
  CHECK(result.total_packets == 999);
}

TEST_CASE("per-path bytes add up to the trace total") {
  const Trace trace = generate(small_traffic(0.5, 4000, 12));
  const std::uint64_t total = trace_bytes(trace);

  for (SplitterKind kind : {SplitterKind::Pwfr, SplitterKind::Mwfr,
                            SplitterKind::Pgrr, SplitterKind::Mrr}) {
    Scenario scenario;
    scenario.weights = validate_weights(std::vector<double>{0.2, 0.5, 0.3});
    scenario.algorithm = kind;
    const RunResult result = replay(scenario, trace);
    std::uint64_t sum = 0;
    for (std::uint64_t b : result.per_path_bytes) sum += b;
    CHECK(sum == total);
    CHECK(result.msd >= 0.0);
  }
}

TEST_CASE("zero-weight path receives nothing from weight-aware splitters") {
  const auto weights = validate_weights(std::vector<double>{0.35, 0.65, 0.0});

  const Trace u_trace = generate(small_traffic(1.0, 3000, 13));
  const Trace t_trace = generate(small_traffic(0.0, 3000, 13));
  const Trace m_trace = generate(small_traffic(0.5, 3000, 13));

  const auto check_starved = [&](SplitterKind kind, const Trace& trace,
                                 RrMode mode) {
    Scenario scenario;
    scenario.weights = weights;
    scenario.algorithm = kind;
    scenario.rr_mode = mode;
    const RunResult r = replay(scenario, trace);
    CHECK(r.per_path_bytes[2] == 0);
    CHECK(r.per_path_packets[2] == 0);
    CHECK(r.per_path_calls[2] == 0);
  };

  check_starved(SplitterKind::Pwfr, u_trace, RrMode::WeightedCount);
  check_starved(SplitterKind::Cwfr, t_trace, RrMode::WeightedCount);
  check_starved(SplitterKind::Mwfr, m_trace, RrMode::WeightedCount);
  check_starved(SplitterKind::Pgrr, u_trace, RrMode::WeightedCount);
  check_starved(SplitterKind::Cgrr, t_trace, RrMode::WeightedCount);
  check_starved(SplitterKind::Mrr, m_trace, RrMode::WeightedCount);
}

TEST_CASE("call-only splitters reject connectionless traffic") {
  Scenario scenario;
  scenario.weights = validate_weights(std::vector<double>{0.5, 0.5});
  scenario.algorithm = SplitterKind::Cwfr;
  scenario.traffic = small_traffic(1.0, 50, 14);
  CHECK_THROWS_AS(run_scenario(scenario), IncompatibleTrafficError);

  scenario.algorithm = SplitterKind::Cgrr;
  scenario.traffic = small_traffic(0.5, 50, 14);
  CHECK_THROWS_AS(run_scenario(scenario), IncompatibleTrafficError);
}

TEST_CASE("per-class deviation split") {
  Scenario scenario;
  scenario.weights = validate_weights(std::vector<double>{0.5, 0.5});
  scenario.algorithm = SplitterKind::Pwfr;
  scenario.traffic = small_traffic(0.5, 2000, 15);
  const RunResult mixed = run_scenario(scenario);
  CHECK(std::isfinite(mixed.msd_connectionless));
  CHECK(std::isfinite(mixed.msd_connection_oriented));

  scenario.traffic = small_traffic(1.0, 2000, 15);
  const RunResult u_only = run_scenario(scenario);
  CHECK(std::isfinite(u_only.msd_connectionless));
  CHECK(std::isnan(u_only.msd_connection_oriented));
}

TEST_CASE("sweep produces one sorted result per grid point and algorithm") {
  SweepSpec spec;
  spec.p1_grid = {0.1, 0.3, 0.5};
  spec.algorithms = {SplitterKind::Pwfr, SplitterKind::Pgrr};
  spec.traffic_classes = {TrafficSelector::U};
  spec.traffic = small_traffic(0.5, 20000, 16);

  const auto results = run_sweep(spec);
  REQUIRE(results.size() == 6);
  for (std::size_t i = 1; i < results.size(); ++i) {
    CHECK(results[i - 1].label < results[i].label);
  }

  for (double p1 : spec.p1_grid) {
    char key[32];
    std::snprintf(key, sizeof key, "p1=%.3f", p1);
    const double fair = find_result(results, SplitterKind::Pwfr, key).msd;
    const double rr = find_result(results, SplitterKind::Pgrr, key).msd;
    CHECK(fair < rr);
  }
}

TEST_CASE("sweep rejects out-of-range grid values") {
  SweepSpec spec;
  spec.p1_grid = {0.7};
  spec.algorithms = {SplitterKind::Pwfr};
  spec.traffic_classes = {TrafficSelector::U};
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);
}

TEST_CASE("empty grid gives empty results") {
  SweepSpec spec;
  spec.algorithms = {SplitterKind::Pwfr};
  spec.traffic_classes = {TrafficSelector::U};
  CHECK(run_sweep(spec).empty());
}

TEST_CASE("default grid matches the documented pattern") {
  const auto grid = default_p1_grid();
  REQUIRE(grid.size() == 11);
  CHECK(grid.front() == 0.001);
  CHECK(grid.back() == doctest::Approx(0.5));
}

TEST_CASE("algorithms inside one grid point consume identical traffic") {
  SweepSpec spec;
  spec.p1_grid = {0.2};
  spec.algorithms = {SplitterKind::Pwfr, SplitterKind::Pgrr};
  spec.traffic_classes = {TrafficSelector::U};
  spec.traffic = small_traffic(0.5, 5000, 17);

  const auto results = run_sweep(spec);
  REQUIRE(results.size() == 2);
  std::uint64_t totals[2] = {0, 0};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::uint64_t b : results[r].per_path_bytes) totals[r] += b;
  }
  CHECK(totals[0] == totals[1]);
}

TEST_CASE("equal-split sweep point scores exactly one twelfth") {
  // Unit packets on (0.5, 0.5, 0): decisions alternate, so every odd packet
  // contributes 0.5 and every even packet 0.
  Scenario scenario;
  scenario.weights = validate_weights(std::vector<double>{0.5, 0.5, 0.0});
  scenario.algorithm = SplitterKind::Pwfr;
  scenario.traffic = small_traffic(1.0, 1000, 18);
  scenario.traffic.size_dist = Dist::fixed(1);
  const RunResult result = run_scenario(scenario);
  CHECK(result.msd == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("swapping the two active weights permutes paths and keeps msd") {
  for (TrafficSelector selector :
       {TrafficSelector::U, TrafficSelector::T, TrafficSelector::Mixed}) {
    const TrafficConfig base = [&] {
      TrafficConfig c = small_traffic(0.5, 6000, 19);
      switch (selector) {
        case TrafficSelector::U: c.class_mix = 1.0; break;
        case TrafficSelector::T: c.class_mix = 0.0; break;
        case TrafficSelector::Mixed: break;
      }
      return c;
    }();
    const Trace trace = generate(base);

    const std::vector<SplitterKind> kinds =
        selector == TrafficSelector::U
            ? std::vector<SplitterKind>{SplitterKind::Pwfr}
        : selector == TrafficSelector::T
            ? std::vector<SplitterKind>{SplitterKind::Cwfr}
            : std::vector<SplitterKind>{SplitterKind::Mwfr};

    for (SplitterKind kind : kinds) {
      Scenario forward;
      forward.weights = validate_weights(std::vector<double>{0.2, 0.8, 0.0});
      forward.algorithm = kind;
      Scenario swapped = forward;
      swapped.weights = validate_weights(std::vector<double>{0.8, 0.2, 0.0});

      const RunResult a = replay(forward, trace);
      const RunResult b = replay(swapped, trace);

      CHECK(std::fabs(a.msd - b.msd) <= 1e-9);
      CHECK(a.per_path_bytes[0] == b.per_path_bytes[1]);
      CHECK(a.per_path_bytes[1] == b.per_path_bytes[0]);
      CHECK(a.per_path_bytes[2] == b.per_path_bytes[2]);
      CHECK(a.per_path_packets[0] == b.per_path_packets[1]);
    }
  }
}

TEST_CASE("decision log captures the 3:1 cycle") {
  Scenario scenario;
  scenario.weights = validate_weights(std::vector<double>{0.75, 0.25});
  scenario.algorithm = SplitterKind::Pwfr;
  scenario.traffic = small_traffic(1.0, 4, 20);
  scenario.traffic.size_dist = Dist::fixed(1);

  std::vector<DecisionRecord> log;
  run_scenario(scenario, &log);
  REQUIRE(log.size() == 4);
  CHECK(log[0].path == PathId(1));
  CHECK(log[1].path == PathId(1));
  CHECK(log[2].path == PathId(2));
  CHECK(log[3].path == PathId(1));

  std::stringstream out;
  write_decision_log(out, log);
  CHECK(out.str() ==
        "seq,call_id,class,path\n"
        "1,-,U,1\n2,-,U,1\n3,-,U,2\n4,-,U,1\n");
}

TEST_CASE("csv output is stable and carries the full schema") {
  SweepSpec spec;
  spec.p1_grid = {0.1, 0.5};
  spec.algorithms = {SplitterKind::Pwfr};
  spec.traffic_classes = {TrafficSelector::U};
  spec.traffic = small_traffic(0.5, 2000, 21);

  std::stringstream first, second;
  write_results_csv(first, run_sweep(spec));
  write_results_csv(second, run_sweep(spec));
  CHECK(first.str() == second.str());

  std::string header;
  std::getline(first, header);
  CHECK(header ==
        "label,algorithm,traffic,p1,p2,p3,msd,max_abs_dev,bytes_1,bytes_2,"
        "bytes_3");

  std::size_t rows = 0;
  std::string line;
  while (std::getline(first, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("random weight runs normalize their draws and label results") {
  TrafficConfig tmpl = small_traffic(0.5, 3000, 22);
  const auto results = random_weight_run(
      5, 99, {SplitterKind::Pwfr, SplitterKind::Pgrr},
      {TrafficSelector::U, TrafficSelector::Mixed}, tmpl);
  REQUIRE(results.size() == 4);
  for (const RunResult& r : results) {
    REQUIRE(r.weights.size() == 5);
    double sum = 0.0;
    for (double w : r.weights) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(1.0));
    CHECK(r.label.find(to_string(r.algorithm)) != std::string::npos);
  }

  CHECK_THROWS_AS(random_weight_run(1, 99, {SplitterKind::Pwfr},
                                    {TrafficSelector::U}, tmpl),
                  ConfigError);
}

TEST_CASE("mixed selector needs a usable template mix") {
  SweepSpec spec;
  spec.p1_grid = {0.2};
  spec.algorithms = {SplitterKind::Mwfr};
  spec.traffic_classes = {TrafficSelector::Mixed};
  spec.traffic = small_traffic(1.0, 100, 23);  // degenerate for Mixed
  CHECK_THROWS_AS(run_sweep(spec), ConfigError);
}
