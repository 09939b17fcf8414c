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

#ifndef MMFAIR_CLI_HPP
#define MMFAIR_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mmfair/error.hpp"
#include "mmfair/game.hpp"
#include "mmfair/lpalloc.hpp"
#include "mmfair/mmf.hpp"
#include "mmfair/model.hpp"
#include "mmfair/report.hpp"
#include "mmfair/scenario_io.hpp"
#include "mmfair/stats.hpp"

namespace mmfair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

namespace detail {

struct SourceOptions {
  std::string scenario_path;
  std::string format;
  std::string builtin;
  std::optional<double> capacity;
  std::string policy = "capacity-share";
};

struct LoadedScenario {
  Scenario scenario;
  bool capacity_overridden = false;
};

inline std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error(std::string("cannot read ") + what, path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw input_error(std::string("cannot read ") + what, path);
  return buf.str();
}

inline void add_source_options(CLI::App& cmd, SourceOptions& o) {
  auto* scen = cmd.add_option("--scenario", o.scenario_path, "Scenario file (json or csv)");
  auto* bi = cmd.add_option("--builtin", o.builtin, "Built-in scenario")
                 ->check(CLI::IsMember({"table2"}));
  scen->excludes(bi);
  cmd.add_option("--format", o.format, "Scenario file format (default: from extension)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--capacity", o.capacity, "Override channel capacity in kbps");
}

inline void add_policy_option(CLI::App& cmd, SourceOptions& o) {
  cmd.add_option("--policy", o.policy, "Initial MMF reference level")
      ->check(CLI::IsMember({"capacity-share", "demand-mean"}))
      ->capture_default_str();
}

inline ReferencePolicy policy_of(const SourceOptions& o) {
  return o.policy == "demand-mean" ? ReferencePolicy::demand_mean
                                   : ReferencePolicy::capacity_share;
}

inline LoadedScenario load_source(const SourceOptions& o, std::ostream& err) {
  const bool overridden = o.capacity.has_value();
  if (overridden) err << "note: capacity overridden to " << format_number(*o.capacity) << " kbps\n";
  if (!o.builtin.empty()) {
    Scenario s = builtin_table2_scenario();
    if (overridden) s = s.with_capacity(*o.capacity);
    return {std::move(s), overridden};
  }
  if (o.scenario_path.empty()) throw input_error("no scenario", "pass --scenario PATH or --builtin table2");
  const std::string text = read_file(o.scenario_path, "scenario");
  std::string fmt = o.format;
  if (fmt.empty()) {
    const auto& p = o.scenario_path;
    fmt = p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0 ? "csv" : "json";
  }
  const auto format = fmt == "csv" ? ScenarioFormat::csv : ScenarioFormat::json;
  return {load_scenario(text, format, o.capacity), overridden};
}

inline Method method_of(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw invalid_parameter("unknown method '" + name + "'");
  return *m;
}

inline std::vector<std::string> method_names() { return {"mmf", "lp-greedy", "lp-proportional"}; }

/// Numbers separated by commas, whitespace or newlines. Lines starting with
/// '#' are comments; a non-numeric first line is taken as a header.
inline std::vector<double> parse_series(const std::string& text, const std::string& path) {
  std::vector<double> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto body = mmfair::detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::string cleaned(body);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream tokens(cleaned);
    std::string tok;
    std::vector<double> row;
    bool numeric = true;
    while (tokens >> tok) {
      const auto v = mmfair::detail::parse_double(tok);
      if (!v) {
        numeric = false;
        break;
      }
      row.push_back(*v);
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw malformed_input(path + " line " + std::to_string(line_no) + ": not a number");
    }
    first = false;
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

inline std::string coalition_label(const BankruptcyGame& g, Coalition c) {
  std::string out;
  for (node_id id : g.members_of(c)) {
    if (!out.empty()) out += ';';
    out += std::to_string(id);
  }
  return out;
}

// ---------------------------------------------------------------------------

inline void cmd_allocate(const SourceOptions& src, const std::string& method_name,
                         const std::string& output, std::ostream& out, std::ostream& err) {
  const auto loaded = load_source(src, err);
  const Scenario& s = loaded.scenario;
  const Method m = method_of(method_name);
  const Allocation a = run_method(s, m, policy_of(src));

  if (output == "json") {
    nlohmann::ordered_json j;
    j["method"] = to_string(m);
    j["capacity_kbps"] = s.capacity_kbps();
    j["capacity_source"] = loaded.capacity_overridden ? "override" : "scenario";
    j["saturated"] = saturation_state(s);
    j["total_kbps"] = a.total();
    auto& rows = j["allocation"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Node& n = s.nodes()[i];
      rows.push_back({{"node", n.id},
                      {"traffic_class", n.traffic_class},
                      {"demand", n.demand_kbps},
                      {"allocated", a.entries()[i].kbps}});
    }
    out << j.dump(2) << "\n";
    return;
  }
  std::string text = "node,traffic_class,demand,allocated\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Node& n = s.nodes()[i];
    text += std::to_string(n.id) + ',' + mmfair::detail::csv_escape(n.traffic_class) + ',' +
            fixed4(n.demand_kbps) + ',' + fixed4(a.entries()[i].kbps) + '\n';
  }
  out << text;
}

inline void cmd_compare(const SourceOptions& src, const std::string& lp, double alpha,
                        const std::string& output, std::ostream& out, std::ostream& err) {
  const auto loaded = load_source(src, err);
  const LpMethod lp_method = lp == "proportional" ? LpMethod::proportional : LpMethod::greedy;
  const ComparisonReport r =
      build_comparison(loaded.scenario, lp_method, alpha, loaded.capacity_overridden, policy_of(src));
  out << (output == "json" ? to_json(r) : to_csv(r));
}

inline void cmd_ttest(const std::string& x_path, const std::string& y_path, double alpha,
                      const std::string& output, std::ostream& out) {
  const auto x = parse_series(read_file(x_path, "series"), x_path);
  const auto y = parse_series(read_file(y_path, "series"), y_path);
  const PairedTTest t = paired_ttest(x, y, alpha);
  if (output == "json") {
    out << ttest_json(t).dump(2) << "\n";
    return;
  }
  std::string text = "statistic,value\n";
  write_ttest_csv(text, t);
  out << text;
}

struct GameOptions {
  std::vector<std::string> methods;
  std::optional<std::size_t> top;
  std::vector<node_id> coalition;
};

inline void cmd_game(const SourceOptions& src, const GameOptions& go, const std::string& output,
                     std::ostream& out, std::ostream& err) {
  const auto loaded = load_source(src, err);
  const Scenario& s = loaded.scenario;
  std::vector<std::string> names = go.methods;
  if (names.empty()) names.push_back("mmf");
  if (names.size() > 2) throw invalid_parameter("--method may be given at most twice");

  const BankruptcyGame game = BankruptcyGame::from_scenario(s);
  struct Listing {
    Method method;
    Allocation allocation;
    std::vector<ExcessEntry> rows;
    std::optional<ExcessVector> full;
  };
  std::vector<Listing> listings;
  for (const auto& name : names) {
    const Method m = method_of(name);
    Allocation a = run_method(s, m, policy_of(src));
    Listing l{m, a, {}, std::nullopt};
    if (!go.coalition.empty()) {
      const Coalition c = game.coalition_of(go.coalition);
      l.rows.push_back({c, excess(game, a, c)});
    }
    if (go.coalition.empty() || names.size() == 2) {
      l.full = excess_vector(game, a);
      if (go.coalition.empty()) {
        const std::size_t k = std::min(go.top.value_or(l.full->entries.size()), l.full->entries.size());
        l.rows.assign(l.full->entries.begin(), l.full->entries.begin() + static_cast<std::ptrdiff_t>(k));
      }
    }
    listings.push_back(std::move(l));
  }
  std::optional<std::string> verdict;
  if (listings.size() == 2)
    verdict = std::string(to_string(listings[0].method)) + " " +
              std::string(to_string(lex_compare(*listings[0].full, *listings[1].full)));

  const auto payoff = [&](const Allocation& a, Coalition c) {
    return mmfair::detail::sum_over(mmfair::detail::payoffs_for(game, a), c);
  };

  if (output == "json") {
    nlohmann::ordered_json j;
    j["estate_kbps"] = game.estate_kbps();
    auto& arr = j["listings"] = nlohmann::ordered_json::array();
    for (const auto& l : listings) {
      nlohmann::ordered_json jl;
      jl["method"] = to_string(l.method);
      auto& rows = jl["excesses"] = nlohmann::ordered_json::array();
      for (const auto& e : l.rows)
        rows.push_back({{"coalition", game.members_of(e.coalition)},
                        {"value", characteristic_value(game, e.coalition)},
                        {"payoff", payoff(l.allocation, e.coalition)},
                        {"excess", e.excess}});
      arr.push_back(std::move(jl));
    }
    if (verdict) j["verdict"] = *verdict;
    out << j.dump(2) << "\n";
    return;
  }
  std::string text = "method,coalition,value,payoff,excess\n";
  for (const auto& l : listings)
    for (const auto& e : l.rows)
      text += std::string(to_string(l.method)) + ',' + coalition_label(game, e.coalition) + ',' +
              fixed4(characteristic_value(game, e.coalition)) + ',' +
              fixed4(payoff(l.allocation, e.coalition)) + ',' + fixed4(e.excess) + '\n';
  if (verdict) text += "\nverdict," + *verdict + "\n";
  out << text;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Data goes to `out`,
/// diagnostics to `err`. Returns 0, 1 (bad input) or 2 (internal fault).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-min fair bandwidth allocation for a saturated shared channel", "mmfair"};
  app.require_subcommand(1);

  detail::SourceOptions src;
  std::string method = "mmf";
  std::string output = "csv";
  std::string lp = "greedy";
  double alpha = kDefaultAlpha;
  std::string x_path;
  std::string y_path;
  detail::GameOptions game_opts;
  std::size_t top = 0;

  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  auto* allocate = app.add_subcommand("allocate", "Allocate bandwidth with one method");
  detail::add_source_options(*allocate, src);
  detail::add_policy_option(*allocate, src);
  allocate->add_option("--method", method, "Allocation method")
      ->check(CLI::IsMember(detail::method_names()))
      ->capture_default_str();
  add_output(allocate);

  auto* compare = app.add_subcommand("compare", "LP baseline vs MMF report with paired t-test");
  detail::add_source_options(*compare, src);
  detail::add_policy_option(*compare, src);
  compare->add_option("--lp", lp, "LP optimum selection")
      ->check(CLI::IsMember({"greedy", "proportional"}))
      ->capture_default_str();
  compare->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  add_output(compare);

  auto* ttest = app.add_subcommand("ttest", "Paired t-test on two series files (Z = X - Y)");
  ttest->add_option("--x", x_path, "File with the X series")->required();
  ttest->add_option("--y", y_path, "File with the Y series")->required();
  ttest->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  add_output(ttest);

  auto* game = app.add_subcommand("game", "Bankruptcy-game coalition excesses");
  detail::add_source_options(*game, src);
  detail::add_policy_option(*game, src);
  game->add_option("--method", game_opts.methods, "Allocation method (repeat to compare two)")
      ->check(CLI::IsMember(detail::method_names()));
  auto* top_opt = game->add_option("--top", top, "List only the K largest excesses");
  auto* coal_opt = game->add_option("--coalition", game_opts.coalition, "Node ids of one coalition")
                       ->delimiter(',');
  top_opt->excludes(coal_opt);
  add_output(game);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*allocate) {
      detail::cmd_allocate(src, method, output, out, err);
    } else if (*compare) {
      detail::cmd_compare(src, lp, alpha, output, out, err);
    } else if (*ttest) {
      detail::cmd_ttest(x_path, y_path, alpha, output, out);
    } else if (*game) {
      if (*top_opt) game_opts.top = top;
      detail::cmd_game(src, game_opts, output, out, err);
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace mmfair::cli

#endif  // MMFAIR_CLI_HPP
