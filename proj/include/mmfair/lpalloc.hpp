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

#ifndef MMFAIR_LPALLOC_HPP
#define MMFAIR_LPALLOC_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mmfair/error.hpp"
#include "mmfair/model.hpp"

namespace mmfair {

/// max sum(w_i x_i)  s.t.  lb_i <= x_i <= ub_i,  sum(x_i) <= capacity.
struct LPProblem {
  std::vector<node_id> ids;
  std::vector<double> weights;
  std::vector<double> lower_bounds;
  std::vector<double> upper_bounds;
  double capacity_kbps = 0.0;

  void validate() const {
    const auto n = ids.size();
    if (weights.size() != n || lower_bounds.size() != n || upper_bounds.size() != n)
      throw invalid_parameter("lp vectors differ in length");
    if (!(capacity_kbps >= 0.0)) throw invalid_parameter("lp capacity < 0");
    for (std::size_t i = 0; i < n; ++i)
      if (lower_bounds[i] > upper_bounds[i])
        throw invalid_parameter("lp lower bound exceeds upper bound for node " +
                                std::to_string(ids[i]));
  }
};

inline LPProblem build_lp(const Scenario& s) {
  LPProblem p;
  p.capacity_kbps = s.capacity_kbps();
  for (const Node& n : s.nodes()) {
    p.ids.push_back(n.id);
    p.weights.push_back(1.0);
    p.lower_bounds.push_back(0.0);
    p.upper_bounds.push_back(n.demand_kbps);
  }
  return p;
}

/// Exact optimum for unit weights: visit nodes by ascending id, give each
/// min(ub, remaining). The vertex reached is deterministic; the objective is
/// min(capacity, sum(ub)).
inline Allocation solve_greedy(const LPProblem& p) {
  p.validate();
  if (!std::all_of(p.weights.begin(), p.weights.end(), [](double w) { return w == 1.0; }))
    throw invalid_parameter("greedy solver requires unit weights");
  if (!std::all_of(p.lower_bounds.begin(), p.lower_bounds.end(), [](double l) { return l == 0.0; }))
    throw invalid_parameter("greedy solver requires zero lower bounds");

  std::vector<std::size_t> order(p.ids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return p.ids[a] < p.ids[b]; });

  std::vector<AllocationEntry> entries(p.ids.size());
  double remaining = p.capacity_kbps;
  for (std::size_t i : order) {
    const double x = std::clamp(std::min(p.upper_bounds[i], remaining), 0.0, p.upper_bounds[i]);
    entries[i] = {p.ids[i], x};
    remaining -= x;
  }
  return Allocation(Method::lp_greedy, std::move(entries));
}

/// Interior point of the optimal face: scale every demand by capacity/sum(d)
/// when saturated, otherwise grant demands in full.
inline Allocation solve_proportional(const Scenario& s) {
  const double total = s.total_demand();
  std::vector<AllocationEntry> entries;
  entries.reserve(s.size());
  if (!saturation_state(s) || total <= 0.0) {
    for (const Node& n : s.nodes()) entries.push_back({n.id, n.demand_kbps});
  } else {
    const double scale = s.capacity_kbps() / total;
    for (const Node& n : s.nodes())
      entries.push_back({n.id, std::min(n.demand_kbps * scale, n.demand_kbps)});
  }
  return Allocation(Method::lp_proportional, std::move(entries));
}

/// sum(w_i x_i); throws infeasible_allocation if any bound or the capacity
/// row is violated by more than kTolerance.
inline double objective_value(const LPProblem& p, const Allocation& a) {
  p.validate();
  double objective = 0.0;
  double used = 0.0;
  for (std::size_t i = 0; i < p.ids.size(); ++i) {
    const auto x = a.find(p.ids[i]);
    if (!x) throw infeasible_allocation("node " + std::to_string(p.ids[i]) + " missing");
    if (*x < p.lower_bounds[i] - kTolerance || *x > p.upper_bounds[i] + kTolerance)
      throw infeasible_allocation("node " + std::to_string(p.ids[i]) + " outside bounds");
    objective += p.weights[i] * *x;
    used += *x;
  }
  if (used > p.capacity_kbps + kTolerance)
    throw infeasible_allocation("capacity exceeded");
  return objective;
}

}  // namespace mmfair

#endif  // MMFAIR_LPALLOC_HPP
