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

#include "splitflow/traffic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "splitflow/errors.hpp"

namespace splitflow {

namespace {

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool parse_number(std::string_view text, double& out) {
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace

double Dist::sample_real(Prng& prng) const {
  switch (kind) {
    case Kind::Fixed:
      return a;
    case Kind::UniformInt: {
      const auto lo = static_cast<std::uint64_t>(a);
      const auto hi = static_cast<std::uint64_t>(b);
      return static_cast<double>(lo + prng.bounded(hi - lo + 1));
    }
    case Kind::Exponential: {
      const double sample = -a * std::log(prng.next_unit());
      return std::min(sample, b);
    }
  }
  return a;
}

std::uint64_t Dist::sample_int(Prng& prng) const {
  const double sample = sample_real(prng);
  const auto rounded = static_cast<std::int64_t>(std::llround(sample));
  return rounded < 1 ? 1 : static_cast<std::uint64_t>(rounded);
}

std::optional<Dist> Dist::parse(const std::string& text) {
  const auto split = [](std::string_view s) {
    std::vector<std::string_view> parts;
    while (true) {
      const auto pos = s.find(':');
      if (pos == std::string_view::npos) {
        parts.push_back(s);
        return parts;
      }
      parts.push_back(s.substr(0, pos));
      s = s.substr(pos + 1);
    }
  };

  const auto parts = split(text);
  double a = 0.0;
  double b = 0.0;
  if (parts[0] == "fixed" && parts.size() == 2 && parse_number(parts[1], a)) {
    return fixed(a);
  }
  if (parts[0] == "uniform" && parts.size() == 3 && parse_number(parts[1], a) &&
      parse_number(parts[2], b)) {
    return Dist{Kind::UniformInt, a, b};
  }
  if (parts[0] == "exp" && parts.size() == 3 && parse_number(parts[1], a) &&
      parse_number(parts[2], b)) {
    return exponential(a, b);
  }
  return std::nullopt;
}

std::string Dist::to_string() const {
  switch (kind) {
    case Kind::Fixed:
      return "fixed:" + format_number(a);
    case Kind::UniformInt:
      return "uniform:" + format_number(a) + ":" + format_number(b);
    case Kind::Exponential:
      return "exp:" + format_number(a) + ":" + format_number(b);
  }
  return {};
}

namespace {

void validate_dist(const Dist& dist, const std::string& field) {
  switch (dist.kind) {
    case Dist::Kind::Fixed:
      if (!(dist.a > 0.0)) {
        throw ConfigError(field, field + ": fixed value must be positive");
      }
      return;
    case Dist::Kind::UniformInt:
      if (dist.a < 1.0 || dist.b < dist.a ||
          dist.a != std::floor(dist.a) || dist.b != std::floor(dist.b)) {
        throw ConfigError(field,
                          field + ": uniform bounds must be integers with "
                                  "1 <= lo <= hi");
      }
      return;
    case Dist::Kind::Exponential:
      if (!(dist.a > 0.0) || !(dist.b >= dist.a)) {
        throw ConfigError(field,
                          field + ": exponential needs mean > 0 and cap >= mean");
      }
      return;
  }
}

}  // namespace

void validate_config(const TrafficConfig& config) {
  if (!(config.class_mix >= 0.0 && config.class_mix <= 1.0)) {
    throw ConfigError("class_mix", "class_mix must be in [0, 1]");
  }
  if (config.n_packets < 1) {
    throw ConfigError("n_packets", "n_packets must be >= 1");
  }
  validate_dist(config.size_dist, "size_dist");
  validate_dist(config.call_bandwidth_dist, "call_bandwidth_dist");
  validate_dist(config.packets_per_call_dist, "packets_per_call_dist");
  if (config.max_concurrent_calls < 1) {
    throw ConfigError("max_concurrent_calls",
                      "max_concurrent_calls must be >= 1");
  }
}

Trace generate(const TrafficConfig& config) {
  validate_config(config);

  Prng prng(config.seed);
  const std::uint64_t total = config.n_packets;
  std::uint64_t remaining_u = static_cast<std::uint64_t>(
      std::llround(config.class_mix * static_cast<double>(total)));
  remaining_u = std::min(remaining_u, total);
  std::uint64_t remaining_t = total - remaining_u;

  struct OpenCall {
    CallId id;
    std::uint64_t budget;  // packets still to emit
    std::optional<std::uint32_t> call_size;
  };
  std::vector<OpenCall> open;
  std::size_t deal_cursor = 0;
  std::uint64_t committed = 0;  // sum of open budgets, always <= remaining_t
  CallId next_call_id = 1;
  std::uint64_t seq = 1;

  Trace trace;
  trace.events.reserve(total + total / 8 + 16);

  const auto sample_size = [&]() {
    const std::uint64_t sample = config.size_dist.sample_int(prng);
    return static_cast<std::uint32_t>(
        std::min<std::uint64_t>(sample, 0xffffffffULL));
  };

  while (remaining_u + remaining_t > 0) {
    // Exact class budgets, randomly interleaved: draw without replacement.
    const bool connectionless =
        prng.bounded(remaining_u + remaining_t) < remaining_u;

    if (connectionless) {
      trace.events.push_back(PacketArrival{
          Packet{seq++, sample_size(), TrafficClass::Connectionless,
                 std::nullopt}});
      --remaining_u;
      continue;
    }

    // Open calls as soon as the concurrency cap allows, but never commit
    // more packets than the trace has left, so every call closes by the end.
    while (open.size() < config.max_concurrent_calls &&
           committed < remaining_t) {
      const std::uint64_t budget =
          std::min(config.packets_per_call_dist.sample_int(prng),
                   remaining_t - committed);
      double bandwidth = config.call_bandwidth_dist.sample_real(prng);
      if (!(bandwidth > 0.0)) bandwidth = 1e-9;
      std::optional<std::uint32_t> call_size;
      if (config.call_size_mode == CallSizeMode::PerCall) {
        call_size = sample_size();
      }
      trace.events.push_back(CallOpen{Call{next_call_id, bandwidth}});
      open.push_back(OpenCall{next_call_id, budget, call_size});
      committed += budget;
      ++next_call_id;
    }

    if (deal_cursor >= open.size()) deal_cursor = 0;
    OpenCall& call = open[deal_cursor];
    const std::uint32_t size =
        call.call_size ? *call.call_size : sample_size();
    trace.events.push_back(PacketArrival{
        Packet{seq++, size, TrafficClass::ConnectionOriented, call.id}});
    --call.budget;
    --remaining_t;
    --committed;

    if (call.budget == 0) {
      trace.events.push_back(CallClose{call.id});
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(deal_cursor));
    } else {
      ++deal_cursor;
    }
  }

  return trace;
}

}  // namespace splitflow
