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

#include "hq/cc_metric.hpp"

#include <ceres/first_order_function.h>
#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hq/errors.hpp"
#include "hq/norms.hpp"
#include "hq/sampling.hpp"

namespace hq {

HorizontalPath::HorizontalPath(std::size_t n, std::size_t steps)
    : n_(n), steps_(steps), controls_(4 * n * steps, 0.0) {
  if (n == 0 || steps == 0) throw DimensionError("HorizontalPath: n and steps must be positive");
}

HorizontalPath::HorizontalPath(std::size_t n, std::size_t steps, std::vector<double> controls)
    : n_(n), steps_(steps), controls_(std::move(controls)) {
  if (n == 0 || steps == 0) throw DimensionError("HorizontalPath: n and steps must be positive");
  if (controls_.size() != 4 * n * steps) {
    throw DimensionError("HorizontalPath: expected " + std::to_string(4 * n * steps) +
                         " control values, got " + std::to_string(controls_.size()));
  }
}

double HorizontalPath::length() const {
  double total = 0.0;
  for (std::size_t i = 0; i < steps_; ++i) {
    double s = 0.0;
    for (double c : control(i)) s += c * c;
    total += std::sqrt(s);
  }
  return total * ds();
}

double HorizontalPath::energy() const {
  double total = 0.0;
  for (double c : controls_) total += c * c;
  return total * ds();
}

namespace {

QTuple as_quaternions(std::span<const double> flat) {
  QTuple q(flat.size() / 4);
  for (std::size_t j = 0; j < q.size(); ++j) {
    q[j] = {flat[4 * j], flat[4 * j + 1], flat[4 * j + 2], flat[4 * j + 3]};
  }
  return q;
}

}  // namespace

void horizontal_velocity(std::span<const Quaternion> x, std::span<const Quaternion> a,
                         std::span<Quaternion> du, Vec3& dt) {
  if (x.size() != a.size() || du.size() != a.size()) {
    throw DimensionError("horizontal_velocity: mismatched quaternionic dimension");
  }
  std::copy(a.begin(), a.end(), du.begin());
  const Vec3 im = qim(dot_bar(a, x));
  dt = {2.0 * im[0], 2.0 * im[1], 2.0 * im[2]};
}

std::vector<GroupElement> develop_knots(const HorizontalPath& path) {
  const std::size_t n = path.n();
  const double h = path.ds();
  std::vector<GroupElement> knots;
  knots.reserve(path.steps() + 1);
  GroupElement g = GroupElement::identity(n);
  knots.push_back(g);

  QTuple du(n);
  std::array<Vec3, 4> kt{};
  std::array<QTuple, 4> ku;
  for (std::size_t i = 0; i < path.steps(); ++i) {
    const QTuple a = as_quaternions(path.control(i));
    // Classical RK4 on (x, t); the right-hand side does not depend on t.
    QTuple stage = g.u;
    const double weights[4] = {0.0, 0.5, 0.5, 1.0};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) {
        for (std::size_t j = 0; j < n; ++j) stage[j] = g.u[j] + (weights[k] * h) * ku[k - 1][j];
      }
      horizontal_velocity(stage, a, du, kt[k]);
      ku[k] = du;
    }
    for (std::size_t j = 0; j < n; ++j) {
      g.u[j] += (h / 6.0) * (ku[0][j] + 2.0 * ku[1][j] + 2.0 * ku[2][j] + ku[3][j]);
    }
    for (int c = 0; c < 3; ++c) {
      g.t[c] += (h / 6.0) * (kt[0][c] + 2.0 * kt[1][c] + 2.0 * kt[2][c] + kt[3][c]);
    }
    knots.push_back(g);
  }
  return knots;
}

GroupElement develop(const HorizontalPath& path) { return develop_knots(path).back(); }

namespace {

double coordinate_distance(const GroupElement& a, const GroupElement& b) {
  const auto ca = to_coordinates(a);
  const auto cb = to_coordinates(b);
  double s = 0.0;
  for (std::size_t c = 0; c < ca.size(); ++c) s += (ca[c] - cb[c]) * (ca[c] - cb[c]);
  return std::sqrt(s);
}

// Energy plus augmented-Lagrangian endpoint terms over the flat controls.
//
// On a segment with constant control a the horizontal part moves linearly, so
// the exact endpoint is
//   u = ds sum_i a_i,  t = 2 ds^2 sum_i Im(a_i . conj(P_i)),  P_i = sum_{j<i} a_j,
// which is also what RK4 reproduces.
class EndpointLagrangian final : public ceres::FirstOrderFunction {
 public:
  EndpointLagrangian(std::size_t n, std::size_t steps, std::vector<double> target)
      : n_(n), steps_(steps), target_(std::move(target)), lambda_(target_.size(), 0.0) {}

  int NumParameters() const override { return static_cast<int>(4 * n_ * steps_); }

  bool Evaluate(const double* params, double* cost, double* gradient) const override {
    const std::size_t w = 4 * n_;
    const double ds = 1.0 / static_cast<double>(steps_);
    std::vector<double> residual = endpoint_residual(params);

    double energy = 0.0;
    for (std::size_t p = 0; p < w * steps_; ++p) energy += params[p] * params[p];
    energy *= ds;

    double penalty = 0.0;
    for (std::size_t c = 0; c < residual.size(); ++c) {
      penalty += lambda_[c] * residual[c] + 0.5 * mu_ * residual[c] * residual[c];
    }
    *cost = energy + penalty;
    if (gradient == nullptr) return true;

    // dPenalty / dresidual
    std::vector<double> g(residual.size());
    for (std::size_t c = 0; c < g.size(); ++c) g[c] = lambda_[c] + mu_ * residual[c];
    const Vec3 g_t{g[w], g[w + 1], g[w + 2]};

    QTuple total(n_);
    for (std::size_t i = 0; i < steps_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) total[j] += quaternion_at(params, i, j);
    }
    QTuple before(n_);
    static constexpr std::array<Quaternion, 4> kBasis = {Quaternion::real(1.0), Quaternion::i(),
                                                         Quaternion::j(), Quaternion::k()};
    for (std::size_t i = 0; i < steps_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const Quaternion a = quaternion_at(params, i, j);
        // Antisymmetry of Im(a conj(b)) folds the later segments into -P_>i.
        const Quaternion lever = before[j] - (total[j] - before[j] - a);
        for (int c = 0; c < 4; ++c) {
          const Vec3 dim = qim(qmul(kBasis[c], qconj(lever)));
          const double dt = g_t[0] * dim[0] + g_t[1] * dim[1] + g_t[2] * dim[2];
          const std::size_t p = i * w + 4 * j + c;
          gradient[p] = 2.0 * ds * params[p] + ds * g[4 * j + c] + 2.0 * ds * ds * dt;
        }
      }
      for (std::size_t j = 0; j < n_; ++j) before[j] += quaternion_at(params, i, j);
    }
    return true;
  }

  std::vector<double> endpoint_residual(const double* params) const {
    const std::size_t w = 4 * n_;
    const double ds = 1.0 / static_cast<double>(steps_);
    QTuple before(n_);
    Vec3 t{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < steps_; ++i) {
      Quaternion twist;
      for (std::size_t j = 0; j < n_; ++j) {
        twist += qmul(quaternion_at(params, i, j), qconj(before[j]));
      }
      const Vec3 im = qim(twist);
      for (int c = 0; c < 3; ++c) t[c] += 2.0 * ds * ds * im[c];
      for (std::size_t j = 0; j < n_; ++j) before[j] += quaternion_at(params, i, j);
    }
    std::vector<double> r(w + 3);
    for (std::size_t j = 0; j < n_; ++j) {
      for (int c = 0; c < 4; ++c) r[4 * j + c] = ds * before[j][c] - target_[4 * j + c];
    }
    for (int c = 0; c < 3; ++c) r[w + c] = t[c] - target_[w + c];
    return r;
  }

  void update_multipliers(const std::vector<double>& residual) {
    for (std::size_t c = 0; c < residual.size(); ++c) lambda_[c] += mu_ * residual[c];
  }
  void scale_penalty(double factor) { mu_ *= factor; }

 private:
  Quaternion quaternion_at(const double* params, std::size_t i, std::size_t j) const {
    const double* q = params + i * 4 * n_ + 4 * j;
    return {q[0], q[1], q[2], q[3]};
  }

  std::size_t n_;
  std::size_t steps_;
  std::vector<double> target_;
  std::vector<double> lambda_;
  double mu_ = 10.0;
};

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

CCResult solve_from(const GroupElement& target, std::vector<double> controls,
                    const CCOptions& options, std::size_t restart) {
  const std::size_t n = target.n();
  // GradientProblem takes ownership of the function.
  auto* lagrangian = new EndpointLagrangian(n, options.steps, to_coordinates(target));
  ceres::GradientProblem problem(lagrangian);

  ceres::GradientProblemSolver::Options solver_options;
  solver_options.line_search_direction_type = ceres::LBFGS;
  solver_options.max_num_iterations = options.max_inner_iterations;
  solver_options.function_tolerance = 1e-15;
  solver_options.gradient_tolerance = 1e-12;
  solver_options.parameter_tolerance = 1e-15;
  solver_options.logging_type = ceres::SILENT;
  solver_options.minimizer_progress_to_stdout = false;

  CCResult result;
  result.restart = restart;
  double previous = std::numeric_limits<double>::infinity();
  int stages = 0;
  for (int outer = 0; outer < options.max_outer; ++outer) {
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(solver_options, problem, controls.data(), &summary);
    result.iterations += summary.iterations.size();

    const auto residual = lagrangian->endpoint_residual(controls.data());
    const double violation = norm(residual);
    if (violation <= 0.5 * options.tol) break;
    lagrangian->update_multipliers(residual);
    if (violation > 0.25 * previous && stages < options.max_penalty_stages) {
      lagrangian->scale_penalty(10.0);
      ++stages;
    }
    previous = violation;
  }

  result.path = HorizontalPath(n, options.steps, std::move(controls));
  result.distance = result.path.length();
  result.endpoint_error = coordinate_distance(develop(result.path), target);
  result.converged = result.endpoint_error <= options.tol;
  return result;
}

bool preferred(const CCResult& candidate, const CCResult& incumbent) {
  if (candidate.converged != incumbent.converged) return candidate.converged;
  if (candidate.converged) return candidate.distance < incumbent.distance;
  return candidate.endpoint_error < incumbent.endpoint_error;
}

}  // namespace

CCResult cc_distance(const GroupElement& target, const CCOptions& options) {
  if (options.steps < 4) throw DomainError("cc_distance: need at least 4 steps");
  if (!(options.tol > 0.0)) throw DomainError("cc_distance: tolerance must be positive");
  if (target.n() == 0) throw DimensionError("cc_distance: empty target");
  const std::size_t n = target.n();

  if (target.is_identity()) {
    CCResult trivial;
    trivial.path = HorizontalPath(n, options.steps);
    trivial.converged = true;
    return trivial;
  }

  const double scale = koranyi(target);
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  CCResult best;
  for (std::size_t r = 0; r < restarts; ++r) {
    // Straight horizontal segment to the target's horizontal part, perturbed.
    Sampler sampler(mix_seed(options.seed, r));
    std::vector<double> controls(4 * n * options.steps);
    for (std::size_t i = 0; i < options.steps; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (int c = 0; c < 4; ++c) {
          controls[i * 4 * n + 4 * j + c] = target.u[j][c] + 0.5 * scale * sampler.normal();
        }
      }
    }
    CCResult candidate = solve_from(target, std::move(controls), options, r);
    if (r == 0 || preferred(candidate, best)) best = std::move(candidate);
  }
  return best;
}

CCResult cc_distance_between(const GroupElement& a, const GroupElement& b,
                             const CCOptions& options) {
  return cc_distance(gmul(ginv(a), b), options);
}

namespace {

// Koranyi sphere point with |u| in stratum `index` of `count` on [0, 1] and
// |t| = sqrt(1 - |u|^4); directions uniform.
GroupElement stratified_sphere_point(Sampler& sampler, std::uint64_t index, std::uint64_t count,
                                     std::size_t n) {
  const double radius = (static_cast<double>(index) + sampler.uniform()) /
                        static_cast<double>(count);
  const double height = std::sqrt(std::max(0.0, 1.0 - radius * radius * radius * radius));
  GroupElement g = sampler.gaussian_element(n);
  const double u_scale = radius / std::sqrt(norm2(g.u));
  for (auto& q : g.u) q = u_scale * q;
  const double t_norm = std::sqrt(g.t[0] * g.t[0] + g.t[1] * g.t[1] + g.t[2] * g.t[2]);
  for (auto& c : g.t) c *= height / t_norm;
  return g;
}

}  // namespace

GaugeComparison compare_to_gauge(std::uint64_t samples, std::uint64_t seed,
                                 const CCOptions& options, std::size_t n) {
  if (samples == 0) throw DomainError("compare_to_gauge: need at least one sample");
  Sampler sampler(seed);
  GaugeComparison out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const GroupElement target = stratified_sphere_point(sampler, s, samples, n);
    CCOptions per_target = options;
    per_target.seed = mix_seed(options.seed ^ seed, s);
    const CCResult r = cc_distance(target, per_target);
    if (!r.converged) {
      ++out.excluded;
      continue;
    }
    const double ratio = r.distance / koranyi(target);
    out.ratios.push_back(ratio);
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
    ++out.evaluated;
  }
  if (out.evaluated == 0) out.min_ratio = 0.0;
  return out;
}

}  // namespace hq
