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

#ifndef SPLITFLOW_WEIGHTS_HPP
#define SPLITFLOW_WEIGHTS_HPP

#include <span>
#include <vector>

#include "splitflow/types.hpp"

namespace splitflow {

/// Target share of load per path: nonnegative fractions summing to 1.
/// Instances are immutable; construct through validate_weights() or
/// normalize_weights().
class RoutingWeightVector {
 public:
  /// Trivial single-path split.
  RoutingWeightVector() : weights_{1.0} {}

  std::size_t size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }

  double weight(std::size_t offset) const { return weights_[offset]; }
  double weight_of(PathId path) const { return weights_[path.offset()]; }

  friend bool operator==(const RoutingWeightVector&,
                         const RoutingWeightVector&) = default;

 private:
  friend RoutingWeightVector validate_weights(std::span<const double> raw);
  friend RoutingWeightVector normalize_weights(std::span<const double> raw);

  explicit RoutingWeightVector(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::vector<double> weights_;
};

/// Sum-to-one tolerance used by validate_weights(). Absorbs decimal
/// round-off in hand-written configs.
inline constexpr double kWeightSumTolerance = 1e-9;

/// Accepts `raw` iff it is non-empty, every entry is >= 0 and the sum is
/// within kWeightSumTolerance of 1. Throws WeightError otherwise.
RoutingWeightVector validate_weights(std::span<const double> raw);

/// Divides each entry by the total. Requires a non-empty vector of
/// nonnegative entries with a positive sum; throws WeightError otherwise.
RoutingWeightVector normalize_weights(std::span<const double> raw);

}  // namespace splitflow

#endif  // SPLITFLOW_WEIGHTS_HPP
