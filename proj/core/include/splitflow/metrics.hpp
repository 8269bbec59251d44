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

#ifndef SPLITFLOW_METRICS_HPP
#define SPLITFLOW_METRICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "splitflow/types.hpp"
#include "splitflow/weights.hpp"

namespace splitflow {

/// Mean-square workload deviation, accumulated per packet decision.
///
/// Tracks expected byte workloads w_i (each packet spreads weight * size
/// over all paths) against actual byte workloads on the chosen paths. After
/// every decision the squared deviations over all paths are added to a
/// running sum; msd() is that sum over (packets * paths). The squared sum
/// uses compensated addition so multi-million-packet runs stay stable.
class DeviationAccumulator {
 public:
  explicit DeviationAccumulator(std::size_t n_paths)
      : expected_(n_paths, 0.0), actual_(n_paths, 0.0) {}

  /// Records one routing decision. Throws MetricError (PathOutOfRange) if
  /// `chosen` does not address one of the accumulator's paths.
  void record(const RoutingWeightVector& weights, std::uint64_t size_bytes,
              PathId chosen);

  /// sq_sum / (m * n). Throws MetricError (EmptyAccumulator) before the
  /// first record.
  double msd() const;

  double max_abs_deviation() const { return max_abs_dev_; }
  std::uint64_t packets() const { return recorded_; }
  std::size_t paths() const { return expected_.size(); }

  std::span<const double> expected() const { return expected_; }
  std::span<const double> actual() const { return actual_; }

 private:
  std::vector<double> expected_;
  std::vector<double> actual_;
  double sq_sum_ = 0.0;
  double sq_carry_ = 0.0;  // Kahan compensation
  double max_abs_dev_ = 0.0;
  std::uint64_t recorded_ = 0;
};

}  // namespace splitflow

#endif  // SPLITFLOW_METRICS_HPP
