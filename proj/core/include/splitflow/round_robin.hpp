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

#ifndef SPLITFLOW_ROUND_ROBIN_HPP
#define SPLITFLOW_ROUND_ROBIN_HPP

#include <span>
#include <unordered_map>
#include <vector>

#include "splitflow/splitter.hpp"

namespace splitflow {

namespace detail {

/// Round-robin path picker shared by the packet and call variants.
/// PureCyclic walks 1..N and ignores weights. WeightedCount runs the
/// surplus rule with every unit counted as 1, so selection counts track
/// the weight vector.
class RrPicker {
 public:
  RrPicker(const RoutingWeightVector& weights, RrMode mode)
      : mode_(mode),
        cursor_(static_cast<std::uint32_t>(weights.size())),
        count_residuals_(weights.size(), 0.0) {}

  PathId pick(const RoutingWeightVector& weights);

  RrMode mode() const { return mode_; }
  PathId cursor() const { return PathId(cursor_); }
  std::span<const double> count_residuals() const { return count_residuals_; }

 private:
  RrMode mode_;
  std::uint32_t cursor_;  // last path handed out; starts at N
  std::vector<double> count_residuals_;
};

}  // namespace detail

/// Packet-based generalized round robin: each packet advances the rotation,
/// whatever its size.
class PgrrSplitter final : public Splitter {
 public:
  PgrrSplitter(RoutingWeightVector weights, RrMode mode)
      : weights_(std::move(weights)), picker_(weights_, mode) {}

  PathId route(const Packet& packet);

  RrMode mode() const { return picker_.mode(); }
  std::span<const double> count_residuals() const {
    return picker_.count_residuals();
  }

  std::optional<PathId> on_event(const TrafficEvent& event) override;
  SplitterKind kind() const override { return SplitterKind::Pgrr; }
  const RoutingWeightVector& weights() const override { return weights_; }

 private:
  RoutingWeightVector weights_;
  detail::RrPicker picker_;
};

/// Call-based generalized round robin: whole calls rotate over the paths and
/// every packet follows its call. Bandwidth is carried in the event stream
/// but never consulted; this splitter counts calls, not load.
class CgrrSplitter final : public Splitter {
 public:
  CgrrSplitter(RoutingWeightVector weights, RrMode mode)
      : weights_(std::move(weights)), picker_(weights_, mode) {}

  PathId open_call(const Call& call);
  void close_call(CallId id);
  PathId route_packet(const Packet& packet);

  RrMode mode() const { return picker_.mode(); }
  std::size_t open_calls() const { return assignments_.size(); }

  std::optional<PathId> on_event(const TrafficEvent& event) override;
  std::optional<PathId> call_path(CallId id) const override;
  SplitterKind kind() const override { return SplitterKind::Cgrr; }
  const RoutingWeightVector& weights() const override { return weights_; }

 private:
  RoutingWeightVector weights_;
  detail::RrPicker picker_;
  std::unordered_map<CallId, PathId> assignments_;
};

}  // namespace splitflow

#endif  // SPLITFLOW_ROUND_ROBIN_HPP
