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

#include "splitflow/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "splitflow/errors.hpp"

namespace splitflow {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw TraceError(TraceError::Code::Parse,
                   line, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_unsigned(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const auto res =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    parse_fail(line, std::string("bad ") + what);
  }
  return value;
}

double parse_double(std::string_view field, std::size_t line,
                    const char* what) {
  double value = 0.0;
  const auto res =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    parse_fail(line, std::string("bad ") + what);
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto pos = s.find(',');
    if (pos == std::string_view::npos) {
      fields.push_back(s);
      return fields;
    }
    fields.push_back(s.substr(0, pos));
    s = s.substr(pos + 1);
  }
}

}  // namespace

void save_trace(const Trace& trace, std::ostream& out) {
  std::string line;
  out << kTraceHeader << '\n';
  for (const TrafficEvent& event : trace.events) {
    line.clear();
    if (const auto* arrival = std::get_if<PacketArrival>(&event)) {
      const Packet& p = arrival->packet;
      line += "P,";
      line += std::to_string(p.seq);
      line += ',';
      line += std::to_string(p.size);
      line += p.traffic_class == TrafficClass::Connectionless ? ",U," : ",T,";
      line += p.call_id ? std::to_string(*p.call_id) : "-";
    } else if (const auto* open = std::get_if<CallOpen>(&event)) {
      line += "O,";
      line += std::to_string(open->call.id);
      line += ',';
      append_double(line, open->call.bandwidth);
    } else {
      line += "C,";
      line += std::to_string(std::get<CallClose>(event).id);
    }
    out << line << '\n';
  }
}

void save_trace(const Trace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  save_trace(trace, out);
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

Trace load_trace(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    parse_fail(1, "empty file, expected header");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader) {
    parse_fail(line_no, std::string("expected header '") + kTraceHeader + "'");
  }

  Trace trace;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) parse_fail(line_no, "blank line");

    const auto fields = split_fields(line);
    const std::string_view tag = fields[0];
    if (tag == "P") {
      if (fields.size() != 5) parse_fail(line_no, "packet line needs 5 fields");
      Packet p;
      p.seq = parse_unsigned<std::uint64_t>(fields[1], line_no, "seq");
      p.size = parse_unsigned<std::uint32_t>(fields[2], line_no, "size");
      if (fields[3] == "U") {
        p.traffic_class = TrafficClass::Connectionless;
      } else if (fields[3] == "T") {
        p.traffic_class = TrafficClass::ConnectionOriented;
      } else {
        parse_fail(line_no, "class must be U or T");
      }
      if (fields[4] != "-") {
        p.call_id = parse_unsigned<CallId>(fields[4], line_no, "call id");
      }
      trace.events.push_back(PacketArrival{p});
    } else if (tag == "O") {
      if (fields.size() != 3) parse_fail(line_no, "open line needs 3 fields");
      Call c;
      c.id = parse_unsigned<CallId>(fields[1], line_no, "call id");
      c.bandwidth = parse_double(fields[2], line_no, "bandwidth");
      trace.events.push_back(CallOpen{c});
    } else if (tag == "C") {
      if (fields.size() != 2) parse_fail(line_no, "close line needs 2 fields");
      trace.events.push_back(
          CallClose{parse_unsigned<CallId>(fields[1], line_no, "call id")});
    } else {
      parse_fail(line_no, "unknown record tag");
    }
  }

  try {
    validate_trace(trace);
  } catch (const TraceError& e) {
    // validate_trace reports the event position; shift by the header line.
    throw TraceError(TraceError::Code::Invariant, e.line() + 1, e.what());
  }
  return trace;
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return load_trace(in);
}

}  // namespace splitflow
