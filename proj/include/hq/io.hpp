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

#ifndef HQ_IO_HPP_
#define HQ_IO_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hq/cc_metric.hpp"
#include "hq/equivalence.hpp"
#include "hq/group.hpp"

namespace hq {

using Json = nlohmann::ordered_json;

/// Seventeen significant digits ("%#.17g", trailing zeros kept): round-trip
/// exact for doubles.
std::string format_number(double x);

/// Parses "w+xi+yj+zk" in any term order; missing terms are zero and a bare
/// unit ("i", "-k") has coefficient one. Throws ParseError.
Quaternion parse_quaternion(std::string_view text);
/// "w+xi+yj+zk" with every component written in its shortest round-trip form.
std::string format_quaternion(const Quaternion& q);

/// Parses "q_1;...;q_n;t1,t2,t3". Throws ParseError.
GroupElement parse_point(std::string_view text);
std::string format_point(const GroupElement& g);

/// {"u": [[w,x,y,z], ...], "t": [t1,t2,t3]}
Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

Json to_json(const EquivEstimate& est);
EquivEstimate estimate_from_json(const Json& j);

Json to_json(const SandwichCheck& check);
Json to_json(const CCResult& result, bool include_path = false);

/// Serializes with every floating-point number printed by format_number.
/// indent < 0 gives a single line.
std::string dump(const Json& j, int indent = 2);

enum class TableFormat { Csv, Json };

/// Writes flat records (JSON objects sharing one key sequence) as CSV with a
/// header row or as a JSON array. Arrays and objects inside a CSV cell are
/// written as quoted compact JSON. With `columns`, every record must use
/// exactly those keys and an empty list still prints the header. Throws
/// std::invalid_argument on mixed schemas.
std::string emit_table(std::span<const Json> records, TableFormat format,
                       const std::vector<std::string>& columns = {});

}  // namespace hq

#endif  // HQ_IO_HPP_
