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

#include <string>
#include <unordered_set>
#include <variant>

#include "splitflow/errors.hpp"
#include "splitflow/types.hpp"

namespace splitflow {

namespace {

[[noreturn]] void fail(std::size_t position, const std::string& what) {
  throw TraceError(TraceError::Code::Invariant, position + 1, what);
}

}  // namespace

void validate_trace(const Trace& trace) {
  std::unordered_set<CallId> open;
  std::unordered_set<CallId> ever_opened;
  std::uint64_t last_seq = 0;
  bool any_packet = false;

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TrafficEvent& event = trace.events[i];

    if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
      const Packet& p = arrival->packet;
      if (p.size < 1) fail(i, "packet size must be >= 1");
      if (any_packet && p.seq <= last_seq) {
        fail(i, "packet sequence numbers must strictly increase");
      }
      last_seq = p.seq;
      any_packet = true;
      if (p.traffic_class == TrafficClass::ConnectionOriented) {
        if (!p.call_id) fail(i, "connection-oriented packet without call id");
        if (!open.contains(*p.call_id)) {
          fail(i, "packet for call " + std::to_string(*p.call_id) +
                      " outside its open/close window");
        }
      } else if (p.call_id) {
        fail(i, "connectionless packet carries a call id");
      }
    } else if (const auto* open_ev = std::get_if<CallOpen>(&event)) {
      const Call& c = open_ev->call;
      if (!(c.bandwidth > 0.0)) fail(i, "call bandwidth must be positive");
      if (ever_opened.contains(c.id)) {
        fail(i, "call id " + std::to_string(c.id) + " opened twice");
      }
      ever_opened.insert(c.id);
      open.insert(c.id);
    } else {
      const auto& close_ev = std::get<CallClose>(event);
      if (!open.erase(close_ev.id)) {
        fail(i, "close of call " + std::to_string(close_ev.id) +
                    " that is not open");
      }
    }
  }
}

}  // namespace splitflow
