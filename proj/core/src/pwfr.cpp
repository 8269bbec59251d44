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

#include "splitflow/pwfr.hpp"

#include <variant>

namespace splitflow {

PathId PwfrSplitter::route(const Packet& packet) {
  const double size = static_cast<double>(packet.size);
  for (std::size_t i = 0; i < residuals_.size(); ++i) {
    residuals_[i] += weights_.weight(i) * size;
  }
  const PathId chosen = pick_max_residual(residuals_, weights_);
  residuals_[chosen.offset()] -= size;
  return chosen;
}

std::optional<PathId> PwfrSplitter::on_event(const TrafficEvent& event) {
  // Call lifecycle events carry no bytes; connection-oriented packets are
  // routed individually, ignoring their call.
  if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
    return route(arrival->packet);
  }
  return std::nullopt;
}

}  // namespace splitflow
