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

#ifndef SPLITFLOW_TYPES_HPP
#define SPLITFLOW_TYPES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace splitflow {

/// 1-based identifier of an outgoing path. Values are in 1..N for the
/// enclosing topology's N; offset() gives the 0-based array position.
class PathId {
 public:
  constexpr explicit PathId(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr std::size_t offset() const { return index_ - 1; }

  friend constexpr bool operator==(PathId, PathId) = default;
  friend constexpr auto operator<=>(PathId, PathId) = default;

 private:
  std::uint32_t index_;
};

using CallId = std::uint64_t;

enum class TrafficClass : std::uint8_t { Connectionless, ConnectionOriented };

/// One unit of connectionless or connection-oriented work. Sequence numbers
/// are global across a trace; call_id is present exactly for
/// ConnectionOriented packets.
struct Packet {
  std::uint64_t seq = 0;
  std::uint32_t size = 0;  // bytes, >= 1
  TrafficClass traffic_class = TrafficClass::Connectionless;
  std::optional<CallId> call_id;

  friend bool operator==(const Packet&, const Packet&) = default;
};

/// A connection with an abstract bandwidth requirement in units.
struct Call {
  CallId id = 0;
  double bandwidth = 0.0;  // > 0

  friend bool operator==(const Call&, const Call&) = default;
};

struct PacketArrival {
  Packet packet;
  friend bool operator==(const PacketArrival&, const PacketArrival&) = default;
};

struct CallOpen {
  Call call;
  friend bool operator==(const CallOpen&, const CallOpen&) = default;
};

struct CallClose {
  CallId id = 0;
  friend bool operator==(const CallClose&, const CallClose&) = default;
};

using TrafficEvent = std::variant<PacketArrival, CallOpen, CallClose>;

/// Ordered event stream. Well-formed traces open every call before its
/// packets and close it exactly once after them; packet sequence numbers
/// strictly increase.
struct Trace {
  std::vector<TrafficEvent> events;
  std::optional<std::uint32_t> n_paths_hint;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Checks trace well-formedness in one forward pass. Throws TraceError
/// (Code::Invariant) naming the first violated constraint and the
/// 0-based event position + 1 as its line.
void validate_trace(const Trace& trace);

}  // namespace splitflow

#endif  // SPLITFLOW_TYPES_HPP
