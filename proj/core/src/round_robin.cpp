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

#include "splitflow/round_robin.hpp"

#include <string>
#include <variant>

#include "splitflow/errors.hpp"

namespace splitflow {

namespace detail {

PathId RrPicker::pick(const RoutingWeightVector& weights) {
  if (mode_ == RrMode::PureCyclic) {
    cursor_ = cursor_ >= weights.size() ? 1 : cursor_ + 1;
    return PathId(cursor_);
  }
  // Surplus rule with every unit counted as 1.
  for (std::size_t i = 0; i < count_residuals_.size(); ++i) {
    count_residuals_[i] += weights.weight(i);
  }
  const PathId chosen = pick_max_residual(count_residuals_, weights);
  count_residuals_[chosen.offset()] -= 1.0;
  cursor_ = chosen.index();
  return chosen;
}

}  // namespace detail

PathId PgrrSplitter::route(const Packet&) {
  // Packet size is irrelevant; each packet is one unit of rotation.
  return picker_.pick(weights_);
}

std::optional<PathId> PgrrSplitter::on_event(const TrafficEvent& event) {
  if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
    return route(arrival->packet);
  }
  return std::nullopt;
}

PathId CgrrSplitter::open_call(const Call& call) {
  if (assignments_.contains(call.id)) {
    throw CallError(CallError::Code::Duplicate, call.id,
                    "call " + std::to_string(call.id) + " is already open");
  }
  const PathId chosen = picker_.pick(weights_);
  assignments_.emplace(call.id, chosen);
  return chosen;
}

void CgrrSplitter::close_call(CallId id) {
  if (!assignments_.erase(id)) {
    throw CallError(CallError::Code::Unknown, id,
                    "close of unknown call " + std::to_string(id));
  }
}

PathId CgrrSplitter::route_packet(const Packet& packet) {
  if (packet.traffic_class == TrafficClass::Connectionless || !packet.call_id) {
    throw IncompatibleTrafficError(
        "cgrr has no rule for connectionless packets");
  }
  const auto it = assignments_.find(*packet.call_id);
  if (it == assignments_.end()) {
    throw CallError(CallError::Code::Unknown, *packet.call_id,
                    "packet for call " + std::to_string(*packet.call_id) +
                        " that is not open");
  }
  return it->second;
}

std::optional<PathId> CgrrSplitter::call_path(CallId id) const {
  const auto it = assignments_.find(id);
  if (it == assignments_.end()) return std::nullopt;
  return it->second;
}

std::optional<PathId> CgrrSplitter::on_event(const TrafficEvent& event) {
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
