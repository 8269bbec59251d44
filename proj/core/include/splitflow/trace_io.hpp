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

#ifndef SPLITFLOW_TRACE_IO_HPP
#define SPLITFLOW_TRACE_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "splitflow/types.hpp"

// Trace file format v1: UTF-8, LF line endings, one event per line after a
// `#splitflow-trace v1` header.
//
//   P,<seq>,<size>,<U|T>,<call_id|->     packet arrival
//   O,<call_id>,<bandwidth>              call open
//   C,<call_id>                          call close
//
// Bandwidths are written with shortest round-trip precision, so
// load(save(t)) == t exactly.

namespace splitflow {

inline constexpr const char* kTraceHeader = "#splitflow-trace v1";

void save_trace(const Trace& trace, std::ostream& out);
void save_trace(const Trace& trace, const std::filesystem::path& path);

/// Parses and validates in one pass. Throws TraceError with the 1-based
/// line number: Code::Parse for malformed lines, Code::Invariant for event
/// streams that break trace well-formedness. Throws IoError if the file
/// cannot be read.
Trace load_trace(std::istream& in);
Trace load_trace(const std::filesystem::path& path);

}  // namespace splitflow

#endif  // SPLITFLOW_TRACE_IO_HPP
