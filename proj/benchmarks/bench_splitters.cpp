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

#include <benchmark/benchmark.h>

#include <vector>

#include "splitflow/harness.hpp"
#include "splitflow/metrics.hpp"
#include "splitflow/prng.hpp"
#include "splitflow/pwfr.hpp"
#include "splitflow/traffic.hpp"

namespace {

using namespace splitflow;

RoutingWeightVector bench_weights(std::size_t n) {
  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<double>(i + 1);
  return normalize_weights(raw);
}

Trace bench_trace(double mix, std::uint64_t packets) {
  TrafficConfig config;
  config.class_mix = mix;
  config.n_packets = packets;
  config.seed = 1234;
  return generate(config);
}

void BM_PwfrRoute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PwfrSplitter splitter(bench_weights(n));
  Prng prng(99);
  std::vector<Packet> packets(4096);
  for (std::uint64_t k = 0; k < packets.size(); ++k) {
    packets[k] = Packet{k + 1, static_cast<std::uint32_t>(64 + prng.bounded(1437)),
                        TrafficClass::Connectionless, std::nullopt};
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(splitter.route(packets[i]));
    i = (i + 1) & (packets.size() - 1);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PwfrRoute)->Arg(3)->Arg(5)->Arg(16);

void BM_SplitterReplay(benchmark::State& state) {
  const auto kind = static_cast<SplitterKind>(state.range(0));
  const bool call_only =
      kind == SplitterKind::Cwfr || kind == SplitterKind::Cgrr;
  const Trace trace = bench_trace(call_only ? 0.0 : 0.5, 100000);

  Scenario scenario;
  scenario.weights = bench_weights(3);
  scenario.algorithm = kind;
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay(scenario, trace));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SplitterReplay)
    ->Arg(static_cast<int>(SplitterKind::Pgrr))
    ->Arg(static_cast<int>(SplitterKind::Cgrr))
    ->Arg(static_cast<int>(SplitterKind::Mrr))
    ->Arg(static_cast<int>(SplitterKind::Pwfr))
    ->Arg(static_cast<int>(SplitterKind::Cwfr))
    ->Arg(static_cast<int>(SplitterKind::Mwfr));

void BM_AccumulatorRecord(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto weights = bench_weights(n);
  DeviationAccumulator acc(n);
  Prng prng(7);
  std::uint32_t path = 1;
  for (auto _ : state) {
    acc.record(weights, 64 + prng.bounded(1437), PathId(path));
    path = path % n + 1;
  }
  benchmark::DoNotOptimize(acc.max_abs_deviation());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AccumulatorRecord)->Arg(3)->Arg(5);

void BM_TraceGeneration(benchmark::State& state) {
  TrafficConfig config;
  config.class_mix = 0.5;
  config.n_packets = static_cast<std::uint64_t>(state.range(0));
  config.seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TraceGeneration)->Arg(10000)->Arg(100000);

// The full default grid for one algorithm pair, the macro-level cost that
// dominates experiment turnaround.
void BM_GridSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.p1_grid = default_p1_grid();
  spec.algorithms = {SplitterKind::Pwfr, SplitterKind::Pgrr};
  spec.traffic_classes = {TrafficSelector::U};
  spec.traffic.n_packets = static_cast<std::uint64_t>(state.range(0));
  spec.traffic.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec));
  }
}
BENCHMARK(BM_GridSweep)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
