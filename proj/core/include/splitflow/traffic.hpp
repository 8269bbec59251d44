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

#ifndef SPLITFLOW_TRAFFIC_HPP
#define SPLITFLOW_TRAFFIC_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "splitflow/prng.hpp"
#include "splitflow/types.hpp"

namespace splitflow {

/// Sampling distribution for packet sizes, call bandwidths and call lengths.
/// Exponential samples are truncated at `cap`.
struct Dist {
  enum class Kind : std::uint8_t { Fixed, UniformInt, Exponential };

  Kind kind = Kind::Fixed;
  double a = 0.0;  // Fixed: value; UniformInt: lo; Exponential: mean
  double b = 0.0;  // UniformInt: hi; Exponential: cap

  static Dist fixed(double value) { return {Kind::Fixed, value, 0.0}; }
  static Dist uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return {Kind::UniformInt, static_cast<double>(lo), static_cast<double>(hi)};
  }
  static Dist exponential(double mean, double cap) {
    return {Kind::Exponential, mean, cap};
  }

  double sample_real(Prng& prng) const;
  /// Integer sample, clamped to >= 1.
  std::uint64_t sample_int(Prng& prng) const;

  /// Parses "fixed:V", "uniform:LO:HI" or "exp:MEAN:CAP".
  static std::optional<Dist> parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Dist&, const Dist&) = default;
};

/// Whether every packet of a call samples its own size or the whole call
/// reuses one draw.
enum class CallSizeMode : std::uint8_t { PerPacket, PerCall };

struct TrafficConfig {
  double class_mix = 0.5;  // fraction of connectionless packets, in [0,1]
  std::uint64_t n_packets = 100000;
  Dist size_dist = Dist::uniform_int(64, 1500);
  Dist call_bandwidth_dist = Dist::exponential(64.0, 640.0);
  Dist packets_per_call_dist = Dist::uniform_int(5, 50);
  CallSizeMode call_size_mode = CallSizeMode::PerPacket;
  std::uint32_t max_concurrent_calls = 32;
  std::uint64_t seed = 42;

  friend bool operator==(const TrafficConfig&, const TrafficConfig&) = default;
};

/// Throws ConfigError naming the first invalid field.
void validate_config(const TrafficConfig& config);

/// Seeded synthetic trace generation; a pure function of the config.
///
/// The connectionless share of packets is met exactly (rounded), classes
/// interleave at random within those budgets, and calls open eagerly up to
/// the concurrency cap with their packets dealt round-robin across open
/// calls. Every call opened closes before the trace ends.
Trace generate(const TrafficConfig& config);

}  // namespace splitflow

#endif  // SPLITFLOW_TRAFFIC_HPP
