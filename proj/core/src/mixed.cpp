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

#include "splitflow/mixed.hpp"

#include <variant>

namespace splitflow {

std::optional<PathId> MwfrSplitter::on_event(const TrafficEvent& event) {
  if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
    if (arrival->packet.traffic_class == TrafficClass::Connectionless) {
      return pwfr_.route(arrival->packet);
    }
    return cwfr_.route_packet(arrival->packet);
  }
  return cwfr_.on_event(event);
}

std::optional<PathId> MrrSplitter::on_event(const TrafficEvent& event) {
  if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
    if (arrival->packet.traffic_class == TrafficClass::Connectionless) {
      return pgrr_.route(arrival->packet);
    }
    return cgrr_.route_packet(arrival->packet);
  }
  return cgrr_.on_event(event);
}

}  // namespace splitflow
