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

#ifndef SPLITFLOW_PWFR_HPP
#define SPLITFLOW_PWFR_HPP

#include <span>
#include <vector>

#include "splitflow/splitter.hpp"

namespace splitflow {

/// Packet-by-packet weighted fair routing.
///
/// Keeps one byte residual per path: expected minus actual bytes, positive
/// while the path is underloaded. Each packet credits every path with its
/// weighted share of the packet size, goes to the path with the largest
/// residual, and debits the full size there. Residuals sum to zero after
/// every completed step, and no path ever owes more than the largest packet
/// routed so far.
class PwfrSplitter final : public Splitter {
 public:
  explicit PwfrSplitter(RoutingWeightVector weights)
      : weights_(std::move(weights)), residuals_(weights_.size(), 0.0) {}

  PathId route(const Packet& packet);

  std::span<const double> residuals() const { return residuals_; }

  std::optional<PathId> on_event(const TrafficEvent& event) override;
  SplitterKind kind() const override { return SplitterKind::Pwfr; }
  const RoutingWeightVector& weights() const override { return weights_; }

 private:
  RoutingWeightVector weights_;
  std::vector<double> residuals_;
};

}  // namespace splitflow

#endif  // SPLITFLOW_PWFR_HPP
