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

#ifndef SPLITFLOW_TESTS_GENERATORS_HPP
#define SPLITFLOW_TESTS_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "splitflow/prng.hpp"
#include "splitflow/weights.hpp"

namespace splitflow::test {

// Random normalized weights; optionally forces one entry to zero so
// starvation paths get exercised.
inline RoutingWeightVector random_weights(Prng& prng, std::size_t n,
                                          bool force_zero_entry = false) {
  std::vector<double> raw(n);
  for (double& w : raw) w = prng.next_unit();
  if (force_zero_entry && n > 1) raw[prng.bounded(n)] = 0.0;
  return normalize_weights(raw);
}

inline std::vector<std::uint64_t> random_sizes(Prng& prng, std::size_t count,
                                               std::uint64_t lo = 1,
                                               std::uint64_t hi = 3000) {
  std::vector<std::uint64_t> sizes(count);
  for (auto& s : sizes) s = lo + prng.bounded(hi - lo + 1);
  return sizes;
}

}  // namespace splitflow::test

#endif  // SPLITFLOW_TESTS_GENERATORS_HPP
