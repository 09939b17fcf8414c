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

#ifndef MMFAIR_MODEL_HPP
#define MMFAIR_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mmfair/error.hpp"

namespace mmfair {

using node_id = std::int64_t;

/// Absolute tolerance, in kbps, for every equality and bound check.
inline constexpr double kTolerance = 1e-9;

struct Node {
  node_id id = 0;
  std::string traffic_class;
  double demand_kbps = 0.0;

  friend bool operator==(const Node&, const Node&) = default;
};

/// A shared channel of fixed capacity and the nodes contending for it.
/// Construction validates; a Scenario object is always well formed.
class Scenario {
 public:
  Scenario(std::vector<Node> nodes, double capacity_kbps)
      : nodes_(std::move(nodes)), capacity_kbps_(capacity_kbps) {
    validate();
  }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  double capacity_kbps() const noexcept { return capacity_kbps_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  double total_demand() const noexcept {
    return std::accumulate(nodes_.begin(), nodes_.end(), 0.0,
                           [](double acc, const Node& n) { return acc + n.demand_kbps; });
  }

  /// Position of `id` in input order, or nullopt.
  std::optional<std::size_t> index_of(node_id id) const noexcept {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].id == id) return i;
    return std::nullopt;
  }

  /// Same nodes, different capacity.
  Scenario with_capacity(double capacity_kbps) const {
    return Scenario(nodes_, capacity_kbps);
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  void validate() const {
    if (!std::isfinite(capacity_kbps_) || capacity_kbps_ <= 0.0)
      throw invalid_scenario("capacity_kbps <= 0");
    if (nodes_.empty()) throw invalid_scenario("nodes is empty");
    std::unordered_set<node_id> seen;
    for (const Node& n : nodes_) {
      if (n.id <= 0)
        throw invalid_scenario("id <= 0 (node " + std::to_string(n.id) + ")");
      if (!seen.insert(n.id).second)
        throw invalid_scenario("duplicate id (node " + std::to_string(n.id) + ")");
      if (!std::isfinite(n.demand_kbps))
        throw invalid_scenario("demand_kbps is not finite (node " + std::to_string(n.id) + ")");
      if (n.demand_kbps < 0.0)
        throw invalid_scenario("demand_kbps < 0 (node " + std::to_string(n.id) + ")");
    }
  }

  std::vector<Node> nodes_;
  double capacity_kbps_;
};

enum class Method { mmf, lp_greedy, lp_proportional };

inline std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::mmf: return "mmf";
    case Method::lp_greedy: return "lp-greedy";
    case Method::lp_proportional: return "lp-proportional";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "mmf") return Method::mmf;
  if (name == "lp-greedy") return Method::lp_greedy;
  if (name == "lp-proportional") return Method::lp_proportional;
  return std::nullopt;
}

struct AllocationEntry {
  node_id id = 0;
  double kbps = 0.0;
};

/// Per-node bandwidth assigned by one method. Entries follow the scenario's
/// node order.
class Allocation {
 public:
  Allocation(Method method, std::vector<AllocationEntry> entries)
      : method_(method), entries_(std::move(entries)) {}

  Method method() const noexcept { return method_; }
  const std::vector<AllocationEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<double> find(node_id id) const noexcept {
    for (const auto& e : entries_)
      if (e.id == id) return e.kbps;
    return std::nullopt;
  }

  double total() const noexcept {
    double sum = 0.0;
    for (const auto& e : entries_) sum += e.kbps;
    return sum;
  }

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.kbps);
    return out;
  }

 private:
  Method method_;
  std::vector<AllocationEntry> entries_;
};

/// Throws invariant_violation unless `a` covers exactly the nodes of `s` and
/// respects 0 <= x_i <= d_i and sum x_i <= capacity.
inline void check_allocation(const Scenario& s, const Allocation& a) {
  if (a.size() != s.size())
    throw invariant_violation("allocation size differs from scenario");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Node& n = s.nodes()[i];
    const AllocationEntry& e = a.entries()[i];
    if (e.id != n.id)
      throw invariant_violation("allocation order differs from scenario");
    if (!(e.kbps >= -kTolerance) || e.kbps > n.demand_kbps + kTolerance)
      throw invariant_violation("allocation outside [0, demand] for node " +
                                std::to_string(n.id));
  }
  if (a.total() > s.capacity_kbps() + kTolerance)
    throw invariant_violation("allocation exceeds capacity");
}

/// The 12-station IBOC FM scenario on a 1600 kbps channel.
inline Scenario builtin_table2_scenario() {
  return Scenario(
      {
          {1, "Music", 200},
          {2, "Spoken Programs", 150},
          {3, "Real-time Data", 180},
          {4, "Advertising", 120},
          {5, "Interviews", 170},
          {6, "Live Events", 250},
          {7, "Podcasts", 140},
          {8, "News", 160},
          {9, "Sports", 190},
          {10, "Concerts", 220},
          {11, "Children's Programming", 130},
          {12, "Diverse Content", 210},
      },
      1600.0);
}

/// True when the channel cannot serve every demand in full. Equality counts.
inline bool saturation_state(const Scenario& s) noexcept {
  return s.capacity_kbps() <= s.total_demand() + kTolerance;
}

}  // namespace mmfair

#endif  // MMFAIR_MODEL_HPP
