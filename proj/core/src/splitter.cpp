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

#include "splitflow/splitter.hpp"

#include "splitflow/mixed.hpp"

namespace splitflow {

std::string to_string(SplitterKind kind) {
  switch (kind) {
    case SplitterKind::Pgrr: return "pgrr";
    case SplitterKind::Cgrr: return "cgrr";
    case SplitterKind::Mrr: return "mrr";
    case SplitterKind::Pwfr: return "pwfr";
    case SplitterKind::Cwfr: return "cwfr";
    case SplitterKind::Mwfr: return "mwfr";
  }
  return "unknown";
}

std::string to_string(RrMode mode) {
  return mode == RrMode::PureCyclic ? "cyclic" : "weighted";
}

std::optional<SplitterKind> splitter_kind_from_string(const std::string& name) {
  if (name == "pgrr") return SplitterKind::Pgrr;
  if (name == "cgrr") return SplitterKind::Cgrr;
  if (name == "mrr") return SplitterKind::Mrr;
  if (name == "pwfr") return SplitterKind::Pwfr;
  if (name == "cwfr") return SplitterKind::Cwfr;
  if (name == "mwfr") return SplitterKind::Mwfr;
  return std::nullopt;
}

PathId pick_max_residual(std::span<const double> values,
                         const RoutingWeightVector& weights) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) {
      best = i;
    } else if (values[i] == values[best] &&
               weights.weight(i) > weights.weight(best)) {
      best = i;
    }
    // Equal value and equal weight keeps the earlier, smaller index.
  }
  return PathId(static_cast<std::uint32_t>(best + 1));
}

std::unique_ptr<Splitter> make_splitter(SplitterKind kind,
                                        RoutingWeightVector weights,
                                        RrMode rr_mode) {
  switch (kind) {
    case SplitterKind::Pwfr:
      return std::make_unique<PwfrSplitter>(std::move(weights));
    case SplitterKind::Cwfr:
      return std::make_unique<CwfrSplitter>(std::move(weights));
    case SplitterKind::Mwfr:
      return std::make_unique<MwfrSplitter>(std::move(weights));
    case SplitterKind::Pgrr:
      return std::make_unique<PgrrSplitter>(std::move(weights), rr_mode);
    case SplitterKind::Cgrr:
      return std::make_unique<CgrrSplitter>(std::move(weights), rr_mode);
    case SplitterKind::Mrr:
      return std::make_unique<MrrSplitter>(std::move(weights), rr_mode);
  }
  return nullptr;
}

}  // namespace splitflow
