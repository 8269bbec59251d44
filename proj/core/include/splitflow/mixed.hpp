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

#ifndef SPLITFLOW_MIXED_HPP
#define SPLITFLOW_MIXED_HPP

#include "splitflow/cwfr.hpp"
#include "splitflow/pwfr.hpp"
#include "splitflow/round_robin.hpp"

namespace splitflow {

/// Mixed weighted fair routing: class dispatcher over two independent
/// inner splitters. Connectionless packets go to a private PWFR instance,
/// call opens/closes and connection-oriented packets to a private CWFR
/// instance. The inners share no load accounting.
class MwfrSplitter final : public Splitter {
 public:
  explicit MwfrSplitter(RoutingWeightVector weights)
      : pwfr_(weights), cwfr_(std::move(weights)) {}

  PwfrSplitter& packet_splitter() { return pwfr_; }
  CwfrSplitter& call_splitter() { return cwfr_; }
  const PwfrSplitter& packet_splitter() const { return pwfr_; }
  const CwfrSplitter& call_splitter() const { return cwfr_; }

  std::optional<PathId> on_event(const TrafficEvent& event) override;
  std::optional<PathId> call_path(CallId id) const override {
    return cwfr_.call_path(id);
  }
  SplitterKind kind() const override { return SplitterKind::Mwfr; }
  const RoutingWeightVector& weights() const override {
    return pwfr_.weights();
  }

 private:
  PwfrSplitter pwfr_;
  CwfrSplitter cwfr_;
};

/// Mixed round robin: the same dispatch with PGRR and CGRR inners.
class MrrSplitter final : public Splitter {
 public:
  MrrSplitter(RoutingWeightVector weights, RrMode mode)
      : pgrr_(weights, mode), cgrr_(std::move(weights), mode) {}

  PgrrSplitter& packet_splitter() { return pgrr_; }
  CgrrSplitter& call_splitter() { return cgrr_; }

  std::optional<PathId> on_event(const TrafficEvent& event) override;
  std::optional<PathId> call_path(CallId id) const override {
    return cgrr_.call_path(id);
  }
  SplitterKind kind() const override { return SplitterKind::Mrr; }
  const RoutingWeightVector& weights() const override {
    return pgrr_.weights();
  }

 private:
  PgrrSplitter pgrr_;
  CgrrSplitter cgrr_;
};

}  // namespace splitflow

#endif  // SPLITFLOW_MIXED_HPP
