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

#ifndef MMFAIR_STATS_HPP
#define MMFAIR_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmfair/error.hpp"
#include "mmfair/model.hpp"

namespace mmfair {

// ---------------------------------------------------------------------------
// Student t distribution
// ---------------------------------------------------------------------------

namespace detail {

// Continued fraction for I_x(a, b), modified Lentz evaluation.
inline double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 100000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw invariant_violation("incomplete beta continued fraction did not converge");
}

}  // namespace detail

/// Regularized incomplete beta I_x(a, b). `y` must equal 1 - x; passing it
/// separately keeps precision when x is close to 1.
inline double incomplete_beta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * detail::beta_continued_fraction(b, a, y) / b;
}

inline double incomplete_beta(double a, double b, double x) {
  return incomplete_beta(a, b, x, 1.0 - x);
}

/// P(T <= t) for Student's t with `df` degrees of freedom.
inline double student_t_cdf(double t, double df) {
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double t2 = t * t;
  const double x = df / (df + t2);
  const double y = t2 / (df + t2);
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x, y);
  return t > 0.0 ? 1.0 - tail : tail;
}

/// Bisection stops once the bracket is narrower than this.
inline constexpr double kCriticalValueTolerance = 1e-9;

/// One-sided upper critical value t* with P(T_df > t*) = alpha.
inline double t_critical(double alpha, std::int64_t df) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw invalid_parameter("alpha must lie in (0, 1), got " + std::to_string(alpha));
  if (df < 1) throw invalid_parameter("df must be >= 1, got " + std::to_string(df));
  if (alpha > 0.5) return -t_critical(1.0 - alpha, df);

  const double nu = static_cast<double>(df);
  const double target = 1.0 - alpha;
  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, nu) < target) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw invalid_parameter("alpha too small to bracket");
  }
  while (hi - lo > kCriticalValueTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (student_t_cdf(mid, nu) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Deficits and the paired test
// ---------------------------------------------------------------------------

/// Requested minus assigned bandwidth per node, in ascending id order.
struct DeficitSeries {
  Method method = Method::mmf;
  std::vector<node_id> ids;
  std::vector<double> values;
};

inline DeficitSeries deficits(const Scenario& s, const Allocation& a) {
  std::vector<const Node*> order;
  for (const Node& n : s.nodes()) order.push_back(&n);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->id < y->id; });

  DeficitSeries out;
  out.method = a.method();
  for (const Node* n : order) {
    const auto x = a.find(n->id);
    if (!x) throw allocation_incomplete("node " + std::to_string(n->id) + " missing");
    const double deficit = n->demand_kbps - *x;
    if (deficit < -kTolerance)
      throw invariant_violation("allocation exceeds demand for node " + std::to_string(n->id));
    out.ids.push_back(n->id);
    out.values.push_back(deficit);
  }
  return out;
}

enum class Decision { fail_to_reject_h0, reject_h0 };

inline std::string_view to_string(Decision d) noexcept {
  return d == Decision::fail_to_reject_h0 ? "fail-to-reject-H0" : "reject-H0";
}

/// One-sided paired t-test of H0: mean(X - Y) <= 0.
struct PairedTTest {
  std::vector<double> z;
  double z_bar = 0.0;
  double s_z = 0.0;
  std::size_t n = 0;
  double g = 0.0;
  double alpha = 0.05;
  std::int64_t df = 0;
  double t_crit = 0.0;
  Decision decision = Decision::fail_to_reject_h0;
};

inline constexpr double kDefaultAlpha = 0.05;

/// Paired test on raw samples. A zero spread yields g = 0 when the mean
/// difference is zero and a signed infinity otherwise.
inline PairedTTest paired_ttest(std::span<const double> x, std::span<const double> y,
                                double alpha = kDefaultAlpha) {
  if (x.size() != y.size())
    throw unpaired_series("lengths " + std::to_string(x.size()) + " and " +
                          std::to_string(y.size()));
  if (x.size() < 2) throw insufficient_samples("need at least 2 pairs, got " +
                                               std::to_string(x.size()));
  PairedTTest r;
  r.alpha = alpha;
  r.n = x.size();
  r.df = static_cast<std::int64_t>(r.n) - 1;
  r.t_crit = t_critical(alpha, r.df);

  r.z.resize(r.n);
  for (std::size_t i = 0; i < r.n; ++i) r.z[i] = x[i] - y[i];
  const double n = static_cast<double>(r.n);
  r.z_bar = std::accumulate(r.z.begin(), r.z.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : r.z) ss += (v - r.z_bar) * (v - r.z_bar);
  r.s_z = std::sqrt(ss / (n - 1.0));

  if (r.s_z > 0.0)
    r.g = r.z_bar / r.s_z * std::sqrt(n);
  else if (r.z_bar == 0.0)
    r.g = 0.0;
  else
    r.g = std::copysign(std::numeric_limits<double>::infinity(), r.z_bar);

  r.decision = r.g < r.t_crit ? Decision::fail_to_reject_h0 : Decision::reject_h0;
  return r;
}

/// Paired test on two deficit series over the same nodes (X minus Y).
inline PairedTTest paired_ttest(const DeficitSeries& x, const DeficitSeries& y,
                                double alpha = kDefaultAlpha) {
  if (!x.ids.empty() && !y.ids.empty() && x.ids != y.ids)
    throw unpaired_series("series cover different nodes");
  return paired_ttest(std::span<const double>(x.values), std::span<const double>(y.values), alpha);
}

}  // namespace mmfair

#endif  // MMFAIR_STATS_HPP
