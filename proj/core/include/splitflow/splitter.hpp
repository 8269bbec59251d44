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

#ifndef SPLITFLOW_SPLITTER_HPP
#define SPLITFLOW_SPLITTER_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "splitflow/types.hpp"
#include "splitflow/weights.hpp"

namespace splitflow {

enum class SplitterKind : std::uint8_t { Pgrr, Cgrr, Mrr, Pwfr, Cwfr, Mwfr };

enum class RrMode : std::uint8_t {
  PureCyclic,     // ignores weights, cycles 1..N
  WeightedCount,  // count-based surplus rule, tracks the weight vector
};

std::string to_string(SplitterKind kind);
std::string to_string(RrMode mode);
std::optional<SplitterKind> splitter_kind_from_string(const std::string& name);

/// Picks argmax over `values`; ties resolve to the larger routing weight,
/// then the smaller path index. Comparisons are strict on raw doubles.
/// Total: always returns a path for a non-empty vector.
PathId pick_max_residual(std::span<const double> values,
                         const RoutingWeightVector& weights);

/// Uniform front of the six splitting algorithms: consume traffic events in
/// order, get back a path per packet. Single-owner mutable state; replaying
/// the same event sequence on a fresh instance reproduces the same decisions.
class Splitter {
 public:
  virtual ~Splitter() = default;

  /// Routes one event. Returns the chosen path for PacketArrival events and
  /// nullopt for call opens/closes.
  virtual std::optional<PathId> on_event(const TrafficEvent& event) = 0;

  /// Path assigned to an open call, if this splitter tracks calls.
  virtual std::optional<PathId> call_path(CallId) const { return std::nullopt; }

  virtual SplitterKind kind() const = 0;
  virtual const RoutingWeightVector& weights() const = 0;
  std::size_t n_paths() const { return weights().size(); }
};

/// Fresh splitter: zero residuals, no call assignments, round-robin cursors
/// parked at path N so the first cyclic step lands on path 1. `rr_mode`
/// applies to the round-robin family (Pgrr, Cgrr, Mrr) and is ignored
/// otherwise; the default is the classic weight-blind rotation.
std::unique_ptr<Splitter> make_splitter(SplitterKind kind,
                                        RoutingWeightVector weights,
                                        RrMode rr_mode = RrMode::PureCyclic);

}  // namespace splitflow

#endif  // SPLITFLOW_SPLITTER_HPP
