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

// Reference computations used only by the tests. Each one reaches its answer
// by a route unrelated to the library code it checks.

#ifndef MMFAIR_TESTS_ORACLES_HPP
#define MMFAIR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "mmfair/model.hpp"

namespace mmfair::oracle {

/// Water level by bisection on lambda -> sum(min(d_i, lambda)).
inline double water_level(const std::vector<double>& demands, double capacity) {
  double lo = 0.0;
  double hi = *std::max_element(demands.begin(), demands.end());
  const auto served = [&](double level) {
    double s = 0.0;
    for (double d : demands) s += std::min(d, level);
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (served(mid) < capacity ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Visits every integer vector with 0 <= x_i <= d_i and sum(x) == capacity.
inline void for_each_integer_allocation(const std::vector<int>& demands, int capacity,
                                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> x(demands.size(), 0);
  std::vector<int> suffix(demands.size() + 1, 0);
  for (std::size_t i = demands.size(); i-- > 0;) suffix[i] = suffix[i + 1] + demands[i];
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == demands.size()) {
      if (left == 0) visit(x);
      return;
    }
    const int lo = std::max(0, left - suffix[i + 1]);
    const int hi = std::min(demands[i], left);
    for (int v = lo; v <= hi; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, capacity);
}

/// -1, 0, +1 comparing ascending-sorted copies lexicographically.
inline int compare_sorted_lex(std::vector<double> a, std::vector<double> b, double tol = 1e-9) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i] - tol) return -1;
    if (a[i] > b[i] + tol) return 1;
  }
  return 0;
}

/// All excesses of proper nonempty coalitions, computed member by member and
/// sorted descending.
inline std::vector<double> brute_excesses(double estate, const std::vector<double>& claims,
                                          const std::vector<double>& payoff) {
  const std::size_t n = claims.size();
  std::vector<double> out;
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) {
    double outside = 0.0;
    double inside = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((m >> k) & 1U)
        inside += payoff[k];
      else
        outside += claims[k];
    }
    out.push_back(std::max(0.0, estate - outside) - inside);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Student t density.
inline double t_density(double t, double df) {
  const double log_c = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                       0.5 * std::log(df * std::numbers::pi);
  return std::exp(log_c - 0.5 * (df + 1.0) * std::log1p(t * t / df));
}

/// CDF by composite Simpson integration of the density from 0 to t.
inline double t_cdf_quadrature(double t, double df, int panels = 20000) {
  if (t == 0.0) return 0.5;
  const double a = 0.0;
  const double b = std::fabs(t);
  const double h = (b - a) / panels;
  double s = t_density(a, df) + t_density(b, df);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * t_density(a + i * h, df);
  const double area = s * h / 3.0;
  return t > 0 ? 0.5 + area : 0.5 - area;
}

/// Upper critical value by bisection on the quadrature CDF.
inline double t_critical_quadrature(double alpha, double df) {
  double lo = 0.0;
  double hi = 64.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (t_cdf_quadrature(mid, df) < 1.0 - alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Random scenario with N in [1, max_nodes], shuffled distinct ids, real demands.
inline Scenario random_scenario(std::mt19937_64& rng, std::size_t max_nodes, bool saturated) {
  std::uniform_int_distribution<std::size_t> count(1, max_nodes);
  std::uniform_real_distribution<double> demand(0.0, 500.0);
  const std::size_t n = count(rng);
  std::vector<node_id> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<node_id>(i + 1);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Node> nodes;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = demand(rng);
    total += d;
    nodes.push_back({ids[i], "class" + std::to_string(ids[i]), d});
  }
  if (total <= 0.0) {
    nodes[0].demand_kbps = 1.0;
    total = 1.0;
  }
  std::uniform_real_distribution<double> frac(0.05, 1.0);
  const double cap = saturated ? total * frac(rng) : total * (1.0 + frac(rng));
  return Scenario(std::move(nodes), cap);
}

}  // namespace mmfair::oracle

#endif  // MMFAIR_TESTS_ORACLES_HPP
