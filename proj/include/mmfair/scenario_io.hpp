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

#ifndef MMFAIR_SCENARIO_IO_HPP
#define MMFAIR_SCENARIO_IO_HPP

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmfair/error.hpp"
#include "mmfair/model.hpp"

namespace mmfair {

enum class ScenarioFormat { json, csv };

inline constexpr std::string_view kScenarioCsvHeader = "id,traffic_class,demand_kbps";

/// Shortest decimal text that parses back to exactly `v`.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw invariant_violation("number formatting failed");
  return std::string(buf.data(), end);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

inline std::optional<std::int64_t> parse_int(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

// RFC 4180 field splitting for one physical line. Unquoted fields are
// trimmed; quoted fields keep their content verbatim and may not span lines.
inline std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  const auto bad = [&](const char* what) {
    return malformed_input("line " + std::to_string(line_no) + ": " + what);
  };
  for (;;) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::string field;
    if (i < line.size() && line[i] == '"') {
      ++i;
      for (;;) {
        if (i >= line.size()) throw bad("unterminated quoted field");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field.push_back(line[i++]);
      }
      while (i < line.size() && line[i] != ',') {
        if (line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
          throw bad("unexpected text after quoted field");
        ++i;
      }
    } else {
      const auto comma = line.find(',', i);
      const auto stop = comma == std::string_view::npos ? line.size() : comma;
      field = std::string(trim(line.substr(i, stop - i)));
      i = stop;
    }
    fields.push_back(std::move(field));
    if (i >= line.size()) break;
    ++i;  // comma
  }
  return fields;
}

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos &&
      trim(field).size() == field.size())
    return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::vector<Node> parse_csv_nodes(std::string_view text) {
  std::vector<Node> nodes;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string ctx = "line " + std::to_string(line_no);
    auto fields = split_csv_line(line, line_no);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "id" || fields[1] != "traffic_class" ||
          fields[2] != "demand_kbps")
        throw malformed_input(ctx + ": expected header '" + std::string(kScenarioCsvHeader) + "'");
      header_seen = true;
      continue;
    }
    if (fields.size() != 3)
      throw malformed_input(ctx + ": expected 3 fields, got " + std::to_string(fields.size()));
    const auto id = parse_int(fields[0]);
    if (!id) throw malformed_input(ctx + ": id: not an integer '" + fields[0] + "'");
    const auto demand = parse_double(fields[2]);
    if (!demand)
      throw malformed_input(ctx + ": demand_kbps: not a number '" + fields[2] + "'");
    nodes.push_back(Node{*id, std::move(fields[1]), *demand});
  }
  if (!header_seen) throw malformed_input("line 1: missing header");
  return nodes;
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                           const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) throw malformed_input(ctx + key + ": missing");
  return *it;
}

inline double json_number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw malformed_input(where + ": expected number");
  return v.get<double>();
}

inline Scenario parse_json_scenario(std::string_view text, std::optional<double> capacity) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed_input("json byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw malformed_input("document: expected object");

  double cap = 0.0;
  if (capacity) {
    cap = *capacity;
  } else {
    cap = json_number(require_field(doc, "capacity_kbps", ""), "capacity_kbps");
  }
  const auto& jnodes = require_field(doc, "nodes", "");
  if (!jnodes.is_array()) throw malformed_input("nodes: expected array");

  std::vector<Node> nodes;
  nodes.reserve(jnodes.size());
  for (std::size_t i = 0; i < jnodes.size(); ++i) {
    const std::string ctx = "nodes[" + std::to_string(i) + "].";
    const auto& jn = jnodes[i];
    if (!jn.is_object()) throw malformed_input("nodes[" + std::to_string(i) + "]: expected object");
    const auto& jid = require_field(jn, "id", ctx);
    if (!jid.is_number_integer()) throw malformed_input(ctx + "id: expected integer");
    Node n;
    n.id = jid.get<std::int64_t>();
    if (auto it = jn.find("traffic_class"); it != jn.end()) {
      if (!it->is_string()) throw malformed_input(ctx + "traffic_class: expected string");
      n.traffic_class = it->get<std::string>();
    }
    n.demand_kbps = json_number(require_field(jn, "demand_kbps", ctx), ctx + "demand_kbps");
    nodes.push_back(std::move(n));
  }
  return Scenario(std::move(nodes), cap);
}

}  // namespace detail

/// Parses and validates a scenario document.
///
/// CSV documents carry no capacity, so `capacity_kbps` is required for them.
/// For JSON it overrides the document's own `capacity_kbps` when present.
/// Syntax and type problems raise malformed_input; semantic problems
/// (duplicate id, negative demand, non-positive capacity) raise
/// invalid_scenario with identical text for both formats.
inline Scenario load_scenario(std::string_view source, ScenarioFormat format,
                              std::optional<double> capacity_kbps = std::nullopt) {
  if (format == ScenarioFormat::json) return detail::parse_json_scenario(source, capacity_kbps);
  auto nodes = detail::parse_csv_nodes(source);
  if (!capacity_kbps) throw malformed_input("capacity_kbps: required for csv scenarios");
  return Scenario(std::move(nodes), *capacity_kbps);
}

inline std::string serialize_json(const Scenario& s) {
  nlohmann::ordered_json doc;
  doc["capacity_kbps"] = s.capacity_kbps();
  auto& arr = doc["nodes"] = nlohmann::ordered_json::array();
  for (const Node& n : s.nodes())
    arr.push_back({{"id", n.id}, {"traffic_class", n.traffic_class}, {"demand_kbps", n.demand_kbps}});
  return doc.dump(2) + "\n";
}

/// Node table only; capacity travels separately.
inline std::string serialize_csv(const Scenario& s) {
  std::string out(kScenarioCsvHeader);
  out += '\n';
  for (const Node& n : s.nodes()) {
    out += std::to_string(n.id);
    out += ',';
    out += detail::csv_escape(n.traffic_class);
    out += ',';
    out += format_number(n.demand_kbps);
    out += '\n';
  }
  return out;
}

}  // namespace mmfair

#endif  // MMFAIR_SCENARIO_IO_HPP
