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

#include "splitflow/cwfr.hpp"

#include <string>
#include <variant>

#include "splitflow/errors.hpp"

namespace splitflow {

std::vector<double> CwfrSplitter::decision_residuals(double q) const {
  double total_reserved = 0.0;
  for (double r : reserved_) total_reserved += r;
  const double demand = total_reserved + q;

  std::vector<double> residuals(reserved_.size());
  for (std::size_t i = 0; i < reserved_.size(); ++i) {
    residuals[i] = weights_.weight(i) * demand - reserved_[i];
  }
  return residuals;
}

PathId CwfrSplitter::open_call(const Call& call) {
  if (assignments_.contains(call.id)) {
    throw CallError(CallError::Code::Duplicate, call.id,
                    "call " + std::to_string(call.id) + " is already open");
  }
  const std::vector<double> residuals = decision_residuals(call.bandwidth);
  const PathId chosen = pick_max_residual(residuals, weights_);
  reserved_[chosen.offset()] += call.bandwidth;
  assignments_.emplace(call.id, Assignment{chosen, call.bandwidth});
  return chosen;
}

void CwfrSplitter::close_call(CallId id) {
  const auto it = assignments_.find(id);
  if (it == assignments_.end()) {
    throw CallError(CallError::Code::Unknown, id,
                    "close of unknown call " + std::to_string(id));
  }
  double& reserved = reserved_[it->second.path.offset()];
  reserved -= it->second.bandwidth;
  // Release order differs from reservation order, so exact cancellation can
  // leave a rounding residue; snap it back to the invariant floor.
  if (reserved < 0.0 && reserved > -1e-9) reserved = 0.0;
  assignments_.erase(it);
}

PathId CwfrSplitter::route_packet(const Packet& packet) {
  if (packet.traffic_class == TrafficClass::Connectionless || !packet.call_id) {
    throw IncompatibleTrafficError(
        "cwfr has no rule for connectionless packets");
  }
  const auto it = assignments_.find(*packet.call_id);
  if (it == assignments_.end()) {
    throw CallError(CallError::Code::Unknown, *packet.call_id,
                    "packet for call " + std::to_string(*packet.call_id) +
                        " that is not open");
  }
  return it->second.path;
}

std::optional<PathId> CwfrSplitter::call_path(CallId id) const {
  const auto it = assignments_.find(id);
  if (it == assignments_.end()) return std::nullopt;
  return it->second.path;
}

std::optional<PathId> CwfrSplitter::on_event(const TrafficEvent& event) {
  if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
    return route_packet(arrival->packet);
  }
  if (const auto* open = std::get_if<CallOpen>(&event)) {
    open_call(open->call);
    return std::nullopt;
  }
  close_call(std::get<CallClose>(event).id);
  return std::nullopt;
}

}  // namespace splitflow
