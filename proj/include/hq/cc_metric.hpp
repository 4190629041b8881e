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

#ifndef HQ_CC_METRIC_HPP_
#define HQ_CC_METRIC_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hq/group.hpp"

namespace hq {

/// Piecewise-constant horizontal controls on [0, 1] split into `steps` equal
/// segments. Row i holds the 4n frame coefficients a_i of segment i, so the
/// developed curve has velocity sum_k a_i[k] X_k(gamma).
class HorizontalPath {
 public:
  HorizontalPath() = default;
  HorizontalPath(std::size_t n, std::size_t steps);
  HorizontalPath(std::size_t n, std::size_t steps, std::vector<double> controls);

  std::size_t n() const { return n_; }
  std::size_t steps() const { return steps_; }
  std::size_t width() const { return 4 * n_; }
  double ds() const { return 1.0 / static_cast<double>(steps_); }

  std::span<const double> control(std::size_t i) const {
    return {controls_.data() + i * width(), width()};
  }
  std::span<double> control(std::size_t i) { return {controls_.data() + i * width(), width()}; }
  const std::vector<double>& controls() const { return controls_; }

  /// sum_i |a_i| ds
  double length() const;
  /// sum_i |a_i|^2 ds
  double energy() const;

 private:
  std::size_t n_ = 0;
  std::size_t steps_ = 0;
  std::vector<double> controls_;
};

/// Velocity of the left-invariant horizontal field with coefficients `a` at
/// the point with horizontal part `x`: (a, 2 Im(a . conj(x))). This is the
/// derivative of g (eps a, 0) at eps = 0 under gmul.
void horizontal_velocity(std::span<const Quaternion> x, std::span<const Quaternion> a,
                         std::span<Quaternion> du, Vec3& dt);

/// Integrates the path from the identity with one classical RK4 step per
/// segment and returns gamma(1). Throws DimensionError if the control width
/// is not 4n.
GroupElement develop(const HorizontalPath& path);

/// gamma at s = 0, 1/N, ..., 1.
std::vector<GroupElement> develop_knots(const HorizontalPath& path);

struct CCOptions {
  std::size_t steps = 32;
  std::size_t restarts = 8;
  std::uint64_t seed = 7;
  double tol = 1e-6;
  /// Augmented-Lagrangian outer iterations per restart.
  int max_outer = 30;
  /// Penalty increases (x10 each) allowed per restart.
  int max_penalty_stages = 5;
  int max_inner_iterations = 2000;
};

struct CCResult {
  double distance = 0.0;
  HorizontalPath path;
  double endpoint_error = 0.0;
  std::uint64_t iterations = 0;
  bool converged = false;
  /// Index of the restart the result came from.
  std::size_t restart = 0;
};

/// Carnot-Caratheodory distance from the identity to `target`.
///
/// Minimizes the control energy sum |a_i|^2 ds subject to develop(path) ==
/// target with an augmented Lagrangian (quadratic endpoint penalty plus
/// multiplier updates, penalty x10 per stage) and L-BFGS inner solves. The
/// reported distance is the length of the best path found, an upper bound
/// on the true distance up to discretization. Restarts differ in their
/// seeded initial perturbation; the shortest converged one wins, ties going
/// to the lowest restart index. Non-convergence is reported through
/// `converged`, never thrown.
CCResult cc_distance(const GroupElement& target, const CCOptions& options = {});

/// d(a, b) = d(identity, a^-1 b).
CCResult cc_distance_between(const GroupElement& a, const GroupElement& b,
                             const CCOptions& options = {});

struct GaugeComparison {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t evaluated = 0;
  /// Targets dropped because the solver did not converge.
  std::size_t excluded = 0;
  std::vector<double> ratios;
};

/// Ratio d_cc / Koranyi on `samples` points of the Koranyi unit sphere. |u| is
/// stratified into `samples` equal bins of [0, 1] with one jittered draw per
/// bin; u and t directions are uniform.
GaugeComparison compare_to_gauge(std::uint64_t samples, std::uint64_t seed,
                                 const CCOptions& options = {}, std::size_t n = 1);

}  // namespace hq

#endif  // HQ_CC_METRIC_HPP_
