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

#include "splitflow/metrics.hpp"

#include <cmath>
#include <string>

#include "splitflow/errors.hpp"

namespace splitflow {

void DeviationAccumulator::record(const RoutingWeightVector& weights,
                                  std::uint64_t size_bytes, PathId chosen) {
  const std::size_t n = expected_.size();
  if (chosen.index() < 1 || chosen.index() > n || weights.size() != n) {
    throw MetricError(MetricError::Code::PathOutOfRange,
                      "path " + std::to_string(chosen.index()) +
                          " out of range for " + std::to_string(n) + " paths");
  }

  const double size = static_cast<double>(size_bytes);
  actual_[chosen.offset()] += size;

  double step_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    expected_[i] += weights.weight(i) * size;
    const double dev = actual_[i] - expected_[i];
    step_sq += dev * dev;
    const double abs_dev = std::fabs(dev);
    if (abs_dev > max_abs_dev_) max_abs_dev_ = abs_dev;
  }

  // Kahan step keeps sq_sum stable over tens of millions of records.
  const double y = step_sq - sq_carry_;
  const double t = sq_sum_ + y;
  sq_carry_ = (t - sq_sum_) - y;
  sq_sum_ = t;

  ++recorded_;
}

double DeviationAccumulator::msd() const {
  if (recorded_ == 0) {
    throw MetricError(MetricError::Code::EmptyAccumulator,
                      "no decisions recorded");
  }
  return sq_sum_ / (static_cast<double>(recorded_) *
                    static_cast<double>(expected_.size()));
}

}  // namespace splitflow
