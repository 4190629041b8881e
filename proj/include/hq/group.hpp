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

#ifndef HQ_GROUP_HPP_
#define HQ_GROUP_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hq/quaternion.hpp"

namespace hq {

/// A point (u, t) of the quaternionic Heisenberg group H^n x R^3.
///
/// The product is
///   (u, t)(r, s) = (u + r, t + s + 2 Im(r . conj(u))),
/// the identity is (0, 0) and the inverse is (-u, -t).
struct GroupElement {
  QTuple u;
  Vec3 t{0.0, 0.0, 0.0};

  /// Quaternionic dimension n.
  std::size_t n() const { return u.size(); }

  static GroupElement identity(std::size_t n) { return {QTuple(n), {0.0, 0.0, 0.0}}; }

  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Real coordinate count 4n + 3.
constexpr std::size_t coordinate_dimension(std::size_t n) { return 4 * n + 3; }

/// Homogeneous dimension: Lebesgue measure scales by rho^(4n+6) under dilations.
constexpr int homogeneous_dimension(int n) { return 4 * n + 6; }

/// Flat coordinates (u_1.w, u_1.x, ..., u_n.z, t_1, t_2, t_3).
std::vector<double> to_coordinates(const GroupElement& g);
GroupElement from_coordinates(std::span<const double> coords);

GroupElement gmul(const GroupElement& a, const GroupElement& b);
GroupElement ginv(const GroupElement& a);

/// Anisotropic dilation (rho u, rho^2 t). Throws DomainError unless rho > 0.
GroupElement dilate(double rho, const GroupElement& a);

/// The square-root parameterisation (sqrt(rho) u, rho t). Equal to
/// dilate(sqrt(rho), a).
GroupElement dilate_sqrt_convention(double rho, const GroupElement& a);

struct HaarScaling {
  double empirical_ratio = 0.0;
  double exact_ratio = 0.0;
};

/// Monte Carlo estimate of vol(dilate(rho, B)) / vol(B) for the unit
/// coordinate box B = [0,1]^(4n+3), against the analytic rho^(4n+6).
///
/// Each volume is estimated by hit counting inside an enclosing box padded
/// so the expected hit rate is one half. Both boxes are filled from the same
/// uniform draws (common random numbers), so rho = 1 gives exactly 1.
/// Membership of delta_rho(B) is tested through the inverse dilation.
/// Deterministic in (rho, n, samples, seed).
HaarScaling haar_scaling_check(double rho, int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace hq

#endif  // HQ_GROUP_HPP_
