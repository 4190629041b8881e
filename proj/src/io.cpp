// Copyright 2026 The hq Authors
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

#include "hq/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hq/errors.hpp"

namespace hq {

std::string format_number(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Infinity" : "-Infinity";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.17g", x);
  return buf;
}

namespace {

// Shortest text that parses back to the same double.
std::string literal_number(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, std::string_view context) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "' in " + std::string(context));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

int unit_index(char ch) {
  switch (ch) {
    case 'i':
      return 1;
    case 'j':
      return 2;
    case 'k':
      return 3;
    default:
      return -1;
  }
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  const std::string context = "quaternion literal '" + std::string(text) + "'";
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw ParseError("empty " + context);

  Quaternion q;
  std::size_t pos = 0;
  bool first = true;
  while (pos < compact.size()) {
    double sign = 1.0;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms of " + context);
    }
    first = false;
    if (pos >= compact.size()) throw ParseError("dangling sign in " + context);

    double magnitude = 1.0;
    if (unit_index(compact[pos]) < 0) {
      const char* begin = compact.data() + pos;
      auto res = std::from_chars(begin, compact.data() + compact.size(), magnitude);
      if (res.ec != std::errc{} || res.ptr == begin) throw ParseError("bad term in " + context);
      pos += static_cast<std::size_t>(res.ptr - begin);
    }
    int component = 0;
    if (pos < compact.size() && unit_index(compact[pos]) > 0) {
      component = unit_index(compact[pos]);
      ++pos;
    }
    q[component] += sign * magnitude;
  }
  return q;
}

std::string format_quaternion(const Quaternion& q) {
  std::string out = literal_number(q.w);
  constexpr char kUnits[] = {'i', 'j', 'k'};
  for (int c = 1; c < 4; ++c) {
    const double v = q[c];
    out += std::signbit(v) ? "-" : "+";
    out += literal_number(std::fabs(v));
    out += kUnits[c - 1];
  }
  return out;
}

GroupElement parse_point(std::string_view text) {
  const std::string context = "point literal '" + std::string(text) + "'";
  const auto parts = split(trim(text), ';');
  if (parts.size() < 2) {
    throw ParseError("expected 'q_1;...;q_n;t1,t2,t3' with n >= 1 in " + context);
  }
  GroupElement g;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) g.u.push_back(parse_quaternion(parts[j]));
  const auto center = split(parts.back(), ',');
  if (center.size() != 3) throw ParseError("center needs three components in " + context);
  for (int c = 0; c < 3; ++c) g.t[c] = parse_real(center[c], context);
  return g;
}

std::string format_point(const GroupElement& g) {
  std::string out;
  for (const auto& q : g.u) out += format_quaternion(q) + ";";
  out += literal_number(g.t[0]) + "," + literal_number(g.t[1]) + "," + literal_number(g.t[2]);
  return out;
}

Json to_json(const GroupElement& g) {
  Json u = Json::array();
  for (const auto& q : g.u) u.push_back({q.w, q.x, q.y, q.z});
  return Json{{"u", std::move(u)}, {"t", {g.t[0], g.t[1], g.t[2]}}};
}

GroupElement group_element_from_json(const Json& j) {
  try {
    GroupElement g;
    for (const auto& q : j.at("u")) {
      if (q.size() != 4) throw ParseError("quaternion entries need four components");
      g.u.push_back({q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                     q.at(3).get<double>()});
    }
    const auto& t = j.at("t");
    if (t.size() != 3 || g.u.empty()) throw ParseError("malformed group element");
    g.t = {t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>()};
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group element JSON: ") + e.what());
  }
}

Json to_json(const EquivEstimate& est) {
  return Json{{"from", est.from.name()},
              {"to", est.to.name()},
              {"n", est.n},
              {"lower_m", est.lower_m},
              {"upper_M", est.upper_M},
              {"argmin", to_json(est.argmin)},
              {"argmax", to_json(est.argmax)},
              {"samples", est.samples},
              {"seed", est.seed},
              {"refined", est.refined}};
}

EquivEstimate estimate_from_json(const Json& j) {
  try {
    EquivEstimate est;
    est.from = NormSpec::parse(j.at("from").get<std::string>());
    est.to = NormSpec::parse(j.at("to").get<std::string>());
    est.n = j.value("n", std::size_t{1});
    est.lower_m = j.at("lower_m").get<double>();
    est.upper_M = j.at("upper_M").get<double>();
    est.argmin = group_element_from_json(j.at("argmin"));
    est.argmax = group_element_from_json(j.at("argmax"));
    est.samples = j.value("samples", std::uint64_t{0});
    est.seed = j.value("seed", std::uint64_t{0});
    est.refined = j.value("refined", false);
    return est;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed estimate JSON: ") + e.what());
  }
}

Json to_json(const SandwichCheck& check) {
  return Json{{"violations", check.violations},
              {"max_excess", check.max_excess},
              {"points", check.points}};
}

Json to_json(const CCResult& result, bool include_path) {
  Json j{{"distance", result.distance},
         {"endpoint_error", result.endpoint_error},
         {"iterations", result.iterations},
         {"converged", result.converged},
         {"steps", result.path.steps()},
         {"restart", result.restart}};
  if (include_path) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < result.path.steps(); ++i) {
      const auto a = result.path.control(i);
      rows.push_back(Json(std::vector<double>(a.begin(), a.end())));
    }
    j["controls"] = std::move(rows);
  }
  return j;
}

namespace {

void write_json(std::ostringstream& os, const Json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (pretty) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << Json(key).dump() << (pretty ? ": " : ":");
        write_json(os, value, indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && !v.is_structured();
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << (scalars && pretty ? ", " : ",");
        first = false;
        if (!scalars) newline(depth + 1);
        write_json(os, v, indent, depth + 1);
      }
      if (!scalars) newline(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no NaN/Infinity literals.
      os << (std::isfinite(v) ? format_number(v) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

std::string csv_cell(const Json& v) {
  std::string text;
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_structured()) {
    text = dump(v, -1);
  } else {
    return v.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::vector<std::string> keys_of(const Json& record) {
  if (!record.is_object()) throw std::invalid_argument("emit_table: records must be objects");
  std::vector<std::string> keys;
  for (const auto& [key, value] : record.items()) keys.push_back(key);
  return keys;
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent, 0);
  return os.str();
}

std::string emit_table(std::span<const Json> records, TableFormat format,
                       const std::vector<std::string>& columns) {
  std::vector<std::string> schema = columns;
  if (schema.empty() && !records.empty()) schema = keys_of(records.front());
  for (const auto& r : records) {
    if (keys_of(r) != schema) throw std::invalid_argument("emit_table: mixed record schemas");
  }

  if (format == TableFormat::Json) {
    Json array = Json::array();
    for (const auto& r : records) array.push_back(r);
    return dump(array) + "\n";
  }

  std::ostringstream os;
  for (std::size_t c = 0; c < schema.size(); ++c) os << (c ? "," : "") << schema[c];
  os << '\n';
  for (const auto& r : records) {
    for (std::size_t c = 0; c < schema.size(); ++c) {
      os << (c ? "," : "") << csv_cell(r.at(schema[c]));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hq
