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

#ifndef MMFAIR_REPORT_HPP
#define MMFAIR_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmfair/lpalloc.hpp"
#include "mmfair/mmf.hpp"
#include "mmfair/model.hpp"
#include "mmfair/scenario_io.hpp"
#include "mmfair/stats.hpp"

namespace mmfair {

/// Fixed four-decimal rendering used by every CSV report. Negative zero
/// prints as zero; infinities print as inf / -inf.
inline std::string fixed4(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string out(buf);
  if (out == "-0.0000") out = "0.0000";
  return out;
}

/// JSON value for a double that may be infinite.
inline nlohmann::ordered_json json_real(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

enum class LpMethod { greedy, proportional };

inline Method to_method(LpMethod m) noexcept {
  return m == LpMethod::greedy ? Method::lp_greedy : Method::lp_proportional;
}

inline Allocation run_method(const Scenario& s, Method m,
                             ReferencePolicy policy = ReferencePolicy::capacity_share) {
  Allocation a = [&] {
    switch (m) {
      case Method::mmf: return progressive_fill(s, policy);
      case Method::lp_greedy: return solve_greedy(build_lp(s));
      case Method::lp_proportional: return solve_proportional(s);
    }
    throw invariant_violation("unknown method");
  }();
  check_allocation(s, a);
  return a;
}

struct ComparisonRow {
  node_id id = 0;
  std::string traffic_class;
  double demand = 0.0;
  double bw_lp = 0.0;
  double bw_mmf = 0.0;
  double y_deficit = 0.0;  // demand - bw_lp
  double x_deficit = 0.0;  // demand - bw_mmf
};

/// LP baseline against MMF, row per node in input order, with the paired
/// test of X = d - bw_mmf against Y = d - bw_lp in the footer.
struct ComparisonReport {
  Method lp_method = Method::lp_greedy;
  double capacity_kbps = 0.0;
  bool capacity_overridden = false;
  std::vector<ComparisonRow> rows;
  ComparisonRow totals;
  PairedTTest test;
};

inline ComparisonReport build_comparison(const Scenario& s, LpMethod lp, double alpha,
                                         bool capacity_overridden = false,
                                         ReferencePolicy policy = ReferencePolicy::capacity_share) {
  const Allocation mmf = run_method(s, Method::mmf, policy);
  const Allocation base = run_method(s, to_method(lp));

  ComparisonReport r;
  r.lp_method = to_method(lp);
  r.capacity_kbps = s.capacity_kbps();
  r.capacity_overridden = capacity_overridden;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Node& n = s.nodes()[i];
    ComparisonRow row{n.id, n.traffic_class, n.demand_kbps, base.entries()[i].kbps,
                      mmf.entries()[i].kbps, 0.0, 0.0};
    row.y_deficit = row.demand - row.bw_lp;
    row.x_deficit = row.demand - row.bw_mmf;
    r.totals.demand += row.demand;
    r.totals.bw_lp += row.bw_lp;
    r.totals.bw_mmf += row.bw_mmf;
    r.totals.y_deficit += row.y_deficit;
    r.totals.x_deficit += row.x_deficit;
    r.rows.push_back(std::move(row));
  }
  r.test = paired_ttest(deficits(s, mmf), deficits(s, base), alpha);
  return r;
}

inline constexpr std::string_view kComparisonCsvHeader =
    "node,traffic_class,demand,bw_lp,bw_mmf,y_deficit,x_deficit";

inline void write_ttest_csv(std::string& out, const PairedTTest& t) {
  out += "alpha," + fixed4(t.alpha) + "\n";
  out += "n," + std::to_string(t.n) + "\n";
  out += "df," + std::to_string(t.df) + "\n";
  out += "z_bar," + fixed4(t.z_bar) + "\n";
  out += "s_z," + fixed4(t.s_z) + "\n";
  out += "g," + fixed4(t.g) + "\n";
  out += "t_crit," + fixed4(t.t_crit) + "\n";
  out += "decision," + std::string(to_string(t.decision)) + "\n";
}

inline nlohmann::ordered_json ttest_json(const PairedTTest& t) {
  nlohmann::ordered_json j;
  j["alpha"] = t.alpha;
  j["n"] = t.n;
  j["df"] = t.df;
  j["z"] = t.z;
  j["z_bar"] = t.z_bar;
  j["s_z"] = t.s_z;
  j["g"] = json_real(t.g);
  j["t_crit"] = t.t_crit;
  j["decision"] = to_string(t.decision);
  return j;
}

/// Rows, a `total` row, a blank line, then `statistic,value` pairs.
inline std::string to_csv(const ComparisonReport& r) {
  std::string out(kComparisonCsvHeader);
  out += '\n';
  const auto line = [&](const std::string& node, const std::string& cls, const ComparisonRow& row) {
    out += node + ',' + detail::csv_escape(cls) + ',' + fixed4(row.demand) + ',' +
           fixed4(row.bw_lp) + ',' + fixed4(row.bw_mmf) + ',' + fixed4(row.y_deficit) + ',' +
           fixed4(row.x_deficit) + '\n';
  };
  for (const auto& row : r.rows) line(std::to_string(row.id), row.traffic_class, row);
  line("total", "", r.totals);
  out += "\nstatistic,value\n";
  out += "lp_method," + std::string(to_string(r.lp_method)) + "\n";
  out += "capacity_kbps," + fixed4(r.capacity_kbps) + "\n";
  out += std::string("capacity_source,") + (r.capacity_overridden ? "override" : "scenario") + "\n";
  write_ttest_csv(out, r.test);
  return out;
}

inline std::string to_json(const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["lp_method"] = to_string(r.lp_method);
  j["capacity_kbps"] = r.capacity_kbps;
  j["capacity_source"] = r.capacity_overridden ? "override" : "scenario";
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"node", row.id},
                    {"traffic_class", row.traffic_class},
                    {"demand", row.demand},
                    {"bw_lp", row.bw_lp},
                    {"bw_mmf", row.bw_mmf},
                    {"y_deficit", row.y_deficit},
                    {"x_deficit", row.x_deficit}});
  j["totals"] = {{"demand", r.totals.demand},
                 {"bw_lp", r.totals.bw_lp},
                 {"bw_mmf", r.totals.bw_mmf},
                 {"y_deficit", r.totals.y_deficit},
                 {"x_deficit", r.totals.x_deficit}};
  j["ttest"] = ttest_json(r.test);
  return j.dump(2) + "\n";
}

}  // namespace mmfair

#endif  // MMFAIR_REPORT_HPP
