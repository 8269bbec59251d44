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

#ifndef SPLITFLOW_CWFR_HPP
#define SPLITFLOW_CWFR_HPP

#include <span>
#include <unordered_map>
#include <vector>

#include "splitflow/splitter.hpp"

namespace splitflow {

/// Call-by-call weighted fair routing.
///
/// Tracks the bandwidth reserved per path by the currently open calls. A new
/// call of bandwidth Q sees total demand A = sum(reserved) + Q, expected
/// reservations w_i * A, and goes to the path whose reservation falls
/// furthest below expectation. The per-decision deviations always sum to
/// exactly Q. All packets of a call follow the call's path; closing a call
/// releases its bandwidth.
class CwfrSplitter final : public Splitter {
 public:
  explicit CwfrSplitter(RoutingWeightVector weights)
      : weights_(std::move(weights)), reserved_(weights_.size(), 0.0) {}

  /// Assigns the call to a path and reserves its bandwidth.
  /// Throws CallError (Duplicate) if the id is already open.
  PathId open_call(const Call& call);

  /// Releases the call's bandwidth. Throws CallError (Unknown) if the id is
  /// not open.
  void close_call(CallId id);

  /// Path assigned at open_call; state is unchanged. Throws CallError
  /// (Unknown) for closed or never-opened calls, IncompatibleTrafficError
  /// for connectionless packets.
  PathId route_packet(const Packet& packet);

  /// Bandwidth deviations a call of bandwidth `q` would see right now;
  /// open_call() picks their argmax. The entries sum to q.
  std::vector<double> decision_residuals(double q) const;

  std::span<const double> reserved() const { return reserved_; }
  std::size_t open_calls() const { return assignments_.size(); }

  std::optional<PathId> on_event(const TrafficEvent& event) override;
  std::optional<PathId> call_path(CallId id) const override;
  SplitterKind kind() const override { return SplitterKind::Cwfr; }
  const RoutingWeightVector& weights() const override { return weights_; }

 private:
  struct Assignment {
    PathId path;
    double bandwidth;
  };

  RoutingWeightVector weights_;
  std::vector<double> reserved_;  // per path, >= 0
  std::unordered_map<CallId, Assignment> assignments_;
};

}  // namespace splitflow

#endif  // SPLITFLOW_CWFR_HPP
