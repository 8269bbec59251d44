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

#include "splitflow/weights.hpp"

#include <cmath>
#include <string>

#include "splitflow/errors.hpp"

namespace splitflow {

namespace {

void reject_negatives(std::span<const double> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0.0 || std::isnan(raw[i])) {
      throw WeightError(WeightError::Code::NegativeWeight,
                        "weight " + std::to_string(i) + " is negative: " +
                            std::to_string(raw[i]),
                        i, raw[i]);
    }
  }
}

}  // namespace

RoutingWeightVector validate_weights(std::span<const double> raw) {
  if (raw.empty()) {
    throw WeightError(WeightError::Code::EmptyVector, "empty weight vector");
  }
  reject_negatives(raw);
  double sum = 0.0;
  for (double w : raw) sum += w;
  if (std::fabs(sum - 1.0) > kWeightSumTolerance) {
    throw WeightError(WeightError::Code::SumNotOne,
                      "weights sum to " + std::to_string(sum) + ", expected 1",
                      0, sum);
  }
  return RoutingWeightVector(std::vector<double>(raw.begin(), raw.end()));
}

RoutingWeightVector normalize_weights(std::span<const double> raw) {
  if (raw.empty()) {
    throw WeightError(WeightError::Code::EmptyVector, "empty weight vector");
  }
  reject_negatives(raw);
  double sum = 0.0;
  for (double w : raw) sum += w;
  if (sum <= 0.0) {
    throw WeightError(WeightError::Code::AllZero,
                      "weights sum to zero, nothing to normalize");
  }
  std::vector<double> scaled(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) scaled[i] = raw[i] / sum;
  return RoutingWeightVector(std::move(scaled));
}

}  // namespace splitflow
