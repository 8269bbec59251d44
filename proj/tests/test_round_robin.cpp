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

#include <doctest.h>

#include <vector>

#include "splitflow/errors.hpp"
#include "splitflow/pwfr.hpp"
#include "splitflow/round_robin.hpp"
#include "support/generators.hpp"

using namespace splitflow;

namespace {

Packet u_packet(std::uint64_t seq, std::uint32_t size = 1) {
  return Packet{seq, size, TrafficClass::Connectionless, std::nullopt};
}

}  // namespace

TEST_CASE("cyclic rotation starts at path 1 and wraps") {
  PgrrSplitter splitter(validate_weights(std::vector<double>{0.2, 0.3, 0.5}),
                        RrMode::PureCyclic);
  std::vector<std::uint32_t> decisions;
  for (std::uint64_t k = 1; k <= 5; ++k) {
    decisions.push_back(splitter.route(u_packet(k, 1 + (k % 7) * 100)).index());
  }
  CHECK(decisions == std::vector<std::uint32_t>{1, 2, 3, 1, 2});
}

TEST_CASE("cyclic rotation ignores weights entirely") {
  PgrrSplitter splitter(validate_weights(std::vector<double>{0.3, 0.7}),
                        RrMode::PureCyclic);
  CHECK(splitter.route(u_packet(1)).index() == 1);
  CHECK(splitter.route(u_packet(2)).index() == 2);
  CHECK(splitter.route(u_packet(3)).index() == 1);
}

TEST_CASE("weighted-count mode follows the 3:1 cycle") {
  PgrrSplitter splitter(validate_weights(std::vector<double>{0.75, 0.25}),
                        RrMode::WeightedCount);
  std::vector<std::uint32_t> decisions;
  for (std::uint64_t k = 1; k <= 4; ++k) {
    // sizes vary; only the count matters
    decisions.push_back(splitter.route(u_packet(k, 100 + 37 * (k % 3))).index());
  }
  CHECK(decisions == std::vector<std::uint32_t>{1, 1, 2, 1});
}

TEST_CASE("single path in both modes") {
  for (RrMode mode : {RrMode::PureCyclic, RrMode::WeightedCount}) {
    PgrrSplitter splitter(validate_weights(std::vector<double>{1.0}), mode);
    for (std::uint64_t k = 1; k <= 5; ++k) {
      CHECK(splitter.route(u_packet(k)).index() == 1);
    }
  }
}

TEST_CASE("weighted-count packet rotation matches byte fair routing on "
          "constant sizes") {
  Prng prng(21);
  for (std::uint32_t size : {1u, 1000u}) {
    for (int round = 0; round < 10; ++round) {
      const auto weights = test::random_weights(prng, 2 + prng.bounded(5));
      PgrrSplitter rr(weights, RrMode::WeightedCount);
      PwfrSplitter fair(weights);
      for (std::uint64_t k = 1; k <= 2000; ++k) {
        const Packet p = u_packet(k, size);
        REQUIRE(rr.route(p) == fair.route(p));
      }
    }
  }
}

TEST_CASE("weighted-count mode starves zero-weight paths") {
  Prng prng(22);
  PgrrSplitter splitter(validate_weights(std::vector<double>{0.5, 0.0, 0.5}),
                        RrMode::WeightedCount);
  for (std::uint64_t k = 1; k <= 5000; ++k) {
    CHECK(splitter.route(u_packet(k, 1 + prng.bounded(999))).index() != 2);
  }
}

TEST_CASE("call rotation assigns whole calls and their packets") {
  CgrrSplitter splitter(validate_weights(std::vector<double>{0.2, 0.3, 0.5}),
                        RrMode::PureCyclic);
  CHECK(splitter.open_call(Call{1, 50.0}) == PathId(1));
  CHECK(splitter.open_call(Call{2, 1.0}) == PathId(2));
  CHECK(splitter.open_call(Call{3, 999.0}) == PathId(3));

  for (std::uint64_t seq = 1; seq <= 9; ++seq) {
    const CallId id = 1 + (seq - 1) % 3;
    const Packet p{seq, 100, TrafficClass::ConnectionOriented, id};
    CHECK(splitter.route_packet(p).index() == id);
  }
}

TEST_CASE("weighted-count call rotation follows the 3:1 cycle") {
  CgrrSplitter splitter(validate_weights(std::vector<double>{0.75, 0.25}),
                        RrMode::WeightedCount);
  std::vector<std::uint32_t> decisions;
  for (CallId id = 1; id <= 4; ++id) {
    decisions.push_back(splitter.open_call(Call{id, 10.0}).index());
  }
  CHECK(decisions == std::vector<std::uint32_t>{1, 1, 2, 1});
}

TEST_CASE("call rotation never reads bandwidth") {
  for (RrMode mode : {RrMode::PureCyclic, RrMode::WeightedCount}) {
    CgrrSplitter a(validate_weights(std::vector<double>{0.6, 0.4}), mode);
    CgrrSplitter b(validate_weights(std::vector<double>{0.6, 0.4}), mode);
    Prng prng(23);
    for (CallId id = 1; id <= 200; ++id) {
      const double qa = 1.0 + static_cast<double>(prng.bounded(1000));
      const double qb = 1.0 + static_cast<double>(prng.bounded(1000));
      CHECK(a.open_call(Call{id, qa}) == b.open_call(Call{id, qb}));
    }
  }
}

TEST_CASE("call rotation error contracts") {
  CgrrSplitter splitter(validate_weights(std::vector<double>{0.5, 0.5}),
                        RrMode::PureCyclic);
  splitter.open_call(Call{1, 10.0});
  CHECK_THROWS_AS(splitter.open_call(Call{1, 10.0}), CallError);

  const Packet unopened{1, 100, TrafficClass::ConnectionOriented, CallId{5}};
  CHECK_THROWS_AS(splitter.route_packet(unopened), CallError);
  CHECK_THROWS_AS(splitter.close_call(6), CallError);

  const Packet u{2, 100, TrafficClass::Connectionless, std::nullopt};
  CHECK_THROWS_AS(splitter.route_packet(u), IncompatibleTrafficError);

  splitter.close_call(1);
  CHECK(splitter.call_path(1) == std::nullopt);
  const Packet closed{3, 100, TrafficClass::ConnectionOriented, CallId{1}};
  CHECK_THROWS_AS(splitter.route_packet(closed), CallError);
}

TEST_CASE("weighted-count call rotation starves zero-weight paths") {
  CgrrSplitter splitter(validate_weights(std::vector<double>{0.0, 0.4, 0.6}),
                        RrMode::WeightedCount);
  for (CallId id = 1; id <= 1000; ++id) {
    CHECK(splitter.open_call(Call{id, 1.0}) != PathId(1));
  }
}
