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

#include "hq/quaternion.hpp"

#include <string>

#include "hq/errors.hpp"

namespace hq {

double norm2(std::span<const Quaternion> u) {
  double s = 0.0;
  for (const auto& q : u) s += q.norm2();
  return s;
}

Quaternion dot_bar(std::span<const Quaternion> r, std::span<const Quaternion> u) {
  if (r.size() != u.size()) {
    throw DimensionError("dot_bar: tuple lengths differ (" + std::to_string(r.size()) + " vs " +
                         std::to_string(u.size()) + ")");
  }
  Quaternion acc;
  for (std::size_t j = 0; j < r.size(); ++j) acc += qmul(r[j], qconj(u[j]));
  return acc;
}

}  // namespace hq
