// Copyright 2026 The mmfair Authors
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

#ifndef MMFAIR_MMF_HPP
#define MMFAIR_MMF_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "mmfair/model.hpp"

namespace mmfair {

/// Demands in ascending order, ties broken by ascending node id. `position`
/// is the node's index in the scenario, used to restore input order.
struct SortedDemandView {
  struct Row {
    double demand_kbps = 0.0;
    node_id id = 0;
    std::size_t position = 0;
  };
  std::vector<Row> rows;
};

inline SortedDemandView sort_demands(const Scenario& s) {
  SortedDemandView view;
  view.rows.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    view.rows.push_back({s.nodes()[i].demand_kbps, s.nodes()[i].id, i});
  std::sort(view.rows.begin(), view.rows.end(), [](const auto& a, const auto& b) {
    if (a.demand_kbps != b.demand_kbps) return a.demand_kbps < b.demand_kbps;
    return a.id < b.id;
  });
  return view;
}

/// How the first reference level is seeded before any row is visited.
enum class ReferencePolicy {
  capacity_share,  // capacity / N
  demand_mean,     // sum(d) / N
};

inline double initial_reference(const Scenario& s,
                                ReferencePolicy policy = ReferencePolicy::capacity_share) {
  const auto n = static_cast<double>(s.size());
  return policy == ReferencePolicy::capacity_share ? s.capacity_kbps() / n : s.total_demand() / n;
}

/// Snapshot of the filler after `cursor` rows of the sorted view were settled.
struct FillState {
  double remaining_capacity_kbps = 0.0;
  double reference_level_kbps = 0.0;
  std::size_t cursor = 0;
};

struct FillResult {
  Allocation allocation;
  /// One state per iteration, starting with the initial state (cursor 0).
  std::vector<FillState> trace;
};

/// Progressive filling over the ascending demand view.
///
/// Row i receives min(demand, reference); the reference is then re-estimated
/// as the remaining capacity shared equally among the rows not yet visited.
/// The reference is never recomputed after the last row. Each assignment is
/// also capped by the remaining capacity, which only binds under the
/// demand_mean seed (a capacity-share reference never exceeds it).
inline FillResult progressive_fill_traced(const Scenario& s,
                                          ReferencePolicy policy = ReferencePolicy::capacity_share) {
  const SortedDemandView view = sort_demands(s);
  const std::size_t n = view.rows.size();

  std::vector<AllocationEntry> entries(n);
  for (std::size_t i = 0; i < n; ++i) entries[i].id = s.nodes()[i].id;

  FillState state{s.capacity_kbps(), initial_reference(s, policy), 0};
  std::vector<FillState> trace;
  trace.reserve(n + 1);
  trace.push_back(state);

  for (const auto& row : view.rows) {
    double assigned = std::min(row.demand_kbps, state.reference_level_kbps);
    assigned = std::clamp(assigned, 0.0, std::max(state.remaining_capacity_kbps, 0.0));
    entries[row.position].kbps = assigned;
    state.remaining_capacity_kbps -= assigned;
    ++state.cursor;
    if (state.cursor < n)
      state.reference_level_kbps =
          state.remaining_capacity_kbps / static_cast<double>(n - state.cursor);
    trace.push_back(state);
  }
  return {Allocation(Method::mmf, std::move(entries)), std::move(trace)};
}

/// Max-min fair allocation of the scenario's capacity, in input node order.
inline Allocation progressive_fill(const Scenario& s,
                                   ReferencePolicy policy = ReferencePolicy::capacity_share) {
  return progressive_fill_traced(s, policy).allocation;
}

/// Water level lambda with sum(min(d_i, lambda)) == capacity, or nullopt when
/// the scenario is not saturated.
inline std::optional<double> fill_level(const Scenario& s) {
  if (!saturation_state(s)) return std::nullopt;
  const SortedDemandView view = sort_demands(s);
  const std::size_t n = view.rows.size();
  double settled = 0.0;  // demands fully below the level
  for (std::size_t k = 0; k < n; ++k) {
    const double d = view.rows[k].demand_kbps;
    const double rest = static_cast<double>(n - k);
    if (settled + d * rest >= s.capacity_kbps()) return (s.capacity_kbps() - settled) / rest;
    settled += d;
  }
  // Only reachable when capacity == total demand within tolerance.
  return view.rows.back().demand_kbps;
}

}  // namespace mmfair

#endif  // MMFAIR_MMF_HPP
