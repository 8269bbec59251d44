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

#ifndef SPLITFLOW_ERRORS_HPP
#define SPLITFLOW_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace splitflow {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected routing weight vector.
class WeightError : public Error {
 public:
  enum class Code { EmptyVector, NegativeWeight, SumNotOne, AllZero };

  WeightError(Code code, const std::string& what, std::size_t index = 0,
              double value = 0.0)
      : Error(what), code_(code), index_(index), value_(value) {}

  Code code() const { return code_; }
  /// Offending entry (NegativeWeight only), 0-based.
  std::size_t index() const { return index_; }
  /// Offending weight or the actual sum, depending on code().
  double value() const { return value_; }

 private:
  Code code_;
  std::size_t index_;
  double value_;
};

/// Duplicate open or unknown call id seen by a call-aware splitter.
class CallError : public Error {
 public:
  enum class Code { Duplicate, Unknown };

  CallError(Code code, std::uint64_t call_id, const std::string& what)
      : Error(what), code_(code), call_id_(call_id) {}

  Code code() const { return code_; }
  std::uint64_t call_id() const { return call_id_; }

 private:
  Code code_;
  std::uint64_t call_id_;
};

/// Trace file could not be parsed, or its event stream breaks an invariant.
class TraceError : public Error {
 public:
  enum class Code { Parse, Invariant };

  TraceError(Code code, std::size_t line, const std::string& what)
      : Error(what), code_(code), line_(line) {}

  Code code() const { return code_; }
  /// 1-based line in the trace file; 0 for in-memory traces.
  std::size_t line() const { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

/// Invalid traffic / scenario configuration; names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class MetricError : public Error {
 public:
  enum class Code { EmptyAccumulator, PathOutOfRange };

  MetricError(Code code, const std::string& what) : Error(what), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

/// A call-only splitter was fed a connectionless packet.
class IncompatibleTrafficError : public Error {
 public:
  explicit IncompatibleTrafficError(const std::string& what) : Error(what) {}
};

}  // namespace splitflow

#endif  // SPLITFLOW_ERRORS_HPP
