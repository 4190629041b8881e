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

#ifndef HQ_EQUIVALENCE_HPP_
#define HQ_EQUIVALENCE_HPP_

#include <cstdint>
#include <span>

#include "hq/group.hpp"
#include "hq/norms.hpp"

namespace hq {

/// Estimated constants m <= M with m ||v||_from <= ||v||_to <= M ||v||_from.
///
/// `argmin` and `argmax` lie on the unit sphere of `from`; the constants are
/// the ratios ||w||_to / ||w||_from at those witnesses.
struct EquivEstimate {
  NormSpec from;
  NormSpec to;
  std::size_t n = 1;
  double lower_m = 0.0;
  double upper_M = 0.0;
  GroupElement argmin;
  GroupElement argmax;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool refined = false;
};

/// dilate(1 / ||v||, v), which has unit norm. Throws UnsupportedFamily for
/// Box and DomainError for the identity.
GroupElement project_to_sphere(const NormSpec& spec, const GroupElement& v);

/// Extremizes ||.||_to over the unit sphere of ||.||_from.
///
/// Draws `samples` directions uniformly on the Euclidean sphere of R^(4n+3),
/// projects each onto the `from` sphere and keeps the first-found minimum and
/// maximum of the ratio. With `refine`, both witnesses are then polished by a
/// coordinate pattern search that re-projects every trial point; the step
/// halves whenever no coordinate move improves, down to 1e-10, with at most
/// 10^4 sweeps. Deterministic in all arguments.
EquivEstimate estimate_constants(const NormSpec& from, const NormSpec& to, std::uint64_t samples,
                                 std::uint64_t seed, bool refine, std::size_t n = 1);

struct SandwichCheck {
  std::uint64_t violations = 0;
  /// max over points of max(m - r, r - M) with r = ||v||_to / ||v||_from;
  /// negative when every point is strictly inside the sandwich.
  double max_excess = 0.0;
  std::uint64_t points = 0;
};

/// Relative slack allowed before a point counts as a violation.
inline constexpr double kSandwichTolerance = 1e-9;

/// Checks the two-sided bound on the given points (identity is skipped).
SandwichCheck verify_sandwich(const EquivEstimate& est, std::span<const GroupElement> points);

/// Checks the two-sided bound on `fresh` Gaussian points, each dilated by a
/// random factor in [10^-2, 10^2].
SandwichCheck verify_sandwich(const EquivEstimate& est, std::uint64_t fresh, std::uint64_t seed);

}  // namespace hq

#endif  // HQ_EQUIVALENCE_HPP_
