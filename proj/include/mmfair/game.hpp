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

#ifndef MMFAIR_GAME_HPP
#define MMFAIR_GAME_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmfair/error.hpp"
#include "mmfair/model.hpp"

namespace mmfair {

/// Subset of players. Bit k stands for the k-th node in scenario order.
class Coalition {
 public:
  using mask_type = std::uint64_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(mask_type mask) : mask_(mask) {}

  constexpr mask_type mask() const noexcept { return mask_; }
  constexpr bool contains(std::size_t position) const noexcept {
    return position < 64 && ((mask_ >> position) & 1U) != 0;
  }
  constexpr bool empty() const noexcept { return mask_ == 0; }

  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  mask_type mask_ = 0;
};

/// Estate E shared among claimants with claims d_i. The characteristic
/// function is the standard bankruptcy form v(S) = max(0, E - d(N \ S)).
class BankruptcyGame {
 public:
  static constexpr std::size_t kMaxPlayers = 64;
  /// Largest N for which the full coalition space is enumerated.
  static constexpr std::size_t kMaxEnumeratedPlayers = 20;

  BankruptcyGame(double estate_kbps, std::vector<node_id> ids, std::vector<double> claims)
      : estate_(estate_kbps), ids_(std::move(ids)), claims_(std::move(claims)) {
    if (!(estate_ >= 0.0)) throw invalid_parameter("estate < 0");
    if (ids_.size() != claims_.size()) throw invalid_parameter("ids and claims differ in length");
    if (ids_.empty()) throw invalid_parameter("game has no players");
    if (ids_.size() > kMaxPlayers)
      throw coalition_space_too_large(std::to_string(ids_.size()) + " players exceeds 64");
    for (double c : claims_)
      if (!(c >= 0.0)) throw invalid_parameter("claim < 0");
  }

  static BankruptcyGame from_scenario(const Scenario& s) {
    std::vector<node_id> ids;
    std::vector<double> claims;
    for (const Node& n : s.nodes()) {
      ids.push_back(n.id);
      claims.push_back(n.demand_kbps);
    }
    return BankruptcyGame(s.capacity_kbps(), std::move(ids), std::move(claims));
  }

  double estate_kbps() const noexcept { return estate_; }
  const std::vector<node_id>& ids() const noexcept { return ids_; }
  const std::vector<double>& claims() const noexcept { return claims_; }
  std::size_t players() const noexcept { return ids_.size(); }

  Coalition grand_coalition() const noexcept {
    return Coalition(players() == 64 ? ~Coalition::mask_type{0}
                                     : (Coalition::mask_type{1} << players()) - 1);
  }

  Coalition coalition_of(std::span<const node_id> members) const {
    Coalition::mask_type mask = 0;
    for (node_id id : members) {
      const auto it = std::find(ids_.begin(), ids_.end(), id);
      if (it == ids_.end()) throw invalid_coalition("unknown node " + std::to_string(id));
      mask |= Coalition::mask_type{1} << static_cast<std::size_t>(it - ids_.begin());
    }
    return Coalition(mask);
  }

  std::vector<node_id> members_of(Coalition c) const {
    std::vector<node_id> out;
    for (std::size_t k = 0; k < players(); ++k)
      if (c.contains(k)) out.push_back(ids_[k]);
    return out;
  }

  void check(Coalition c) const {
    if ((c.mask() & ~grand_coalition().mask()) != 0)
      throw invalid_coalition("coalition references players beyond " + std::to_string(players()));
  }

 private:
  double estate_;
  std::vector<node_id> ids_;
  std::vector<double> claims_;
};

namespace detail {

inline double sum_over(const std::vector<double>& values, Coalition c) {
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (c.contains(k)) sum += values[k];
  return sum;
}

// Allocation values in game player order.
inline std::vector<double> payoffs_for(const BankruptcyGame& g, const Allocation& a) {
  std::vector<double> out;
  out.reserve(g.players());
  for (node_id id : g.ids()) {
    const auto v = a.find(id);
    if (!v) throw allocation_incomplete("node " + std::to_string(id) + " missing");
    out.push_back(*v);
  }
  return out;
}

}  // namespace detail

inline double characteristic_value(const BankruptcyGame& g, Coalition s) {
  g.check(s);
  if (s == g.grand_coalition()) return g.estate_kbps();
  const Coalition outside(g.grand_coalition().mask() & ~s.mask());
  return std::max(0.0, g.estate_kbps() - detail::sum_over(g.claims(), outside));
}

/// g_S = v(S) - sum of payoffs to members of S.
inline double excess(const BankruptcyGame& g, const Allocation& a, Coalition s) {
  const double v = characteristic_value(g, s);
  return v - detail::sum_over(detail::payoffs_for(g, a), s);
}

struct ExcessEntry {
  Coalition coalition;
  double excess = 0.0;
};

/// Excesses of every proper nonempty coalition, largest first; ties by
/// ascending coalition mask.
struct ExcessVector {
  std::vector<ExcessEntry> entries;
};

inline ExcessVector excess_vector(const BankruptcyGame& g, const Allocation& a) {
  const std::size_t n = g.players();
  if (n > BankruptcyGame::kMaxEnumeratedPlayers)
    throw coalition_space_too_large(std::to_string(n) + " players exceeds the limit of " +
                                    std::to_string(BankruptcyGame::kMaxEnumeratedPlayers));
  const std::vector<double> pay = detail::payoffs_for(g, a);
  const std::size_t count = std::size_t{1} << n;
  const Coalition::mask_type full = count - 1;

  // Subset sums by peeling the lowest set bit.
  std::vector<double> claim_sum(count, 0.0);
  std::vector<double> pay_sum(count, 0.0);
  for (std::size_t m = 1; m < count; ++m) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
    const std::size_t rest = m & (m - 1);
    claim_sum[m] = claim_sum[rest] + g.claims()[low];
    pay_sum[m] = pay_sum[rest] + pay[low];
  }

  ExcessVector out;
  out.entries.reserve(count - 2);
  for (std::size_t m = 1; m < full; ++m) {
    const double v = std::max(0.0, g.estate_kbps() - claim_sum[full & ~m]);
    out.entries.push_back({Coalition(m), v - pay_sum[m]});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& x, const auto& y) {
    if (x.excess != y.excess) return x.excess > y.excess;
    return x.coalition.mask() < y.coalition.mask();
  });
  return out;
}

enum class Fairness { less_fair, equal, more_fair };

inline std::string_view to_string(Fairness f) noexcept {
  switch (f) {
    case Fairness::less_fair: return "less-fair";
    case Fairness::equal: return "equal";
    case Fairness::more_fair: return "more-fair";
  }
  return "unknown";
}

/// Lexicographic comparison of sorted excesses. The lexicographically
/// smaller vector is the fairer one (closer to the nucleolus). Values within
/// kTolerance compare equal.
inline Fairness lex_compare(const ExcessVector& u, const ExcessVector& w) {
  if (u.entries.size() != w.entries.size())
    throw games_differ("excess vectors have lengths " + std::to_string(u.entries.size()) +
                       " and " + std::to_string(w.entries.size()));
  for (std::size_t k = 0; k < u.entries.size(); ++k) {
    const double a = u.entries[k].excess;
    const double b = w.entries[k].excess;
    if (a < b - kTolerance) return Fairness::more_fair;
    if (a > b + kTolerance) return Fairness::less_fair;
  }
  return Fairness::equal;
}

}  // namespace mmfair

#endif  // MMFAIR_GAME_HPP
