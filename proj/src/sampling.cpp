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

#include "hq/sampling.hpp"

#include <cmath>

namespace hq {

GroupElement Sampler::gaussian_element(std::size_t n) {
  GroupElement g = GroupElement::identity(n);
  for (auto& q : g.u) q = {normal(), normal(), normal(), normal()};
  for (auto& c : g.t) c = normal();
  return g;
}

GroupElement Sampler::sphere_direction(std::size_t n) {
  for (;;) {
    auto coords = to_coordinates(gaussian_element(n));
    double r2 = 0.0;
    for (double c : coords) r2 += c * c;
    if (r2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(r2);
    for (double& c : coords) c *= inv;
    return from_coordinates(coords);
  }
}

}  // namespace hq
