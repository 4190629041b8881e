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

#include "hq/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "hq/errors.hpp"
#include "hq/sampling.hpp"

namespace hq {

namespace {

void require_homogeneous(const NormSpec& spec) {
  if (!spec.homogeneous()) {
    throw UnsupportedFamily("norm family '" + spec.name() +
                            "' is not homogeneous under dilations; no unit-sphere projection");
  }
}

struct Witness {
  double ratio = 0.0;
  GroupElement point;
};

double sphere_ratio(const NormSpec& from, const NormSpec& to, const GroupElement& w) {
  return eval(to, w) / eval(from, w);
}

constexpr double kInitialStep = 0.05;
constexpr double kFinalStep = 1e-10;
constexpr int kMaxSweeps = 10000;

Witness refine(const NormSpec& from, const NormSpec& to, Witness start, bool maximize) {
  auto better = [maximize](double candidate, double incumbent) {
    return maximize ? candidate > incumbent : candidate < incumbent;
  };
  std::vector<double> coords = to_coordinates(start.point);
  double step = kInitialStep;
  for (int sweep = 0; sweep < kMaxSweeps && step >= kFinalStep; ++sweep) {
    bool improved = false;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> trial = coords;
        trial[c] += sign * step;
        const GroupElement p = from_coordinates(trial);
        if (p.is_identity()) continue;
        GroupElement w = project_to_sphere(from, p);
        const double r = sphere_ratio(from, to, w);
        if (better(r, start.ratio)) {
          start = {r, std::move(w)};
          coords = to_coordinates(start.point);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return start;
}

}  // namespace

GroupElement project_to_sphere(const NormSpec& spec, const GroupElement& v) {
  require_homogeneous(spec);
  if (v.is_identity()) throw DomainError("project_to_sphere: the identity has no direction");
  return dilate(1.0 / eval(spec, v), v);
}

EquivEstimate estimate_constants(const NormSpec& from, const NormSpec& to, std::uint64_t samples,
                                 std::uint64_t seed, bool refine_witnesses, std::size_t n) {
  require_homogeneous(from);
  require_homogeneous(to);
  if (samples == 0) throw DomainError("estimate_constants: need at least one sample");
  if (n == 0) throw DomainError("estimate_constants: n must be at least 1");

  Sampler sampler(seed);
  Witness lo;
  Witness hi;
  for (std::uint64_t s = 0; s < samples; ++s) {
    GroupElement w = project_to_sphere(from, sampler.sphere_direction(n));
    const double r = sphere_ratio(from, to, w);
    if (s == 0 || r < lo.ratio) lo = {r, w};
    if (s == 0 || r > hi.ratio) hi = {r, std::move(w)};
  }
  if (refine_witnesses) {
    lo = refine(from, to, std::move(lo), /*maximize=*/false);
    hi = refine(from, to, std::move(hi), /*maximize=*/true);
  }

  EquivEstimate est;
  est.from = from;
  est.to = to;
  est.n = n;
  est.lower_m = lo.ratio;
  est.upper_M = hi.ratio;
  est.argmin = std::move(lo.point);
  est.argmax = std::move(hi.point);
  est.samples = samples;
  est.seed = seed;
  est.refined = refine_witnesses;
  return est;
}

SandwichCheck verify_sandwich(const EquivEstimate& est, std::span<const GroupElement> points) {
  SandwichCheck out;
  out.max_excess = -INFINITY;
  for (const auto& v : points) {
    const double a = eval(est.from, v);
    if (a == 0.0) continue;
    const double b = eval(est.to, v);
    ++out.points;
    const bool below = b < est.lower_m * a * (1.0 - kSandwichTolerance);
    const bool above = b > est.upper_M * a * (1.0 + kSandwichTolerance);
    if (below || above) ++out.violations;
    const double r = b / a;
    out.max_excess = std::max({out.max_excess, est.lower_m - r, r - est.upper_M});
  }
  if (out.points == 0) out.max_excess = 0.0;
  return out;
}

SandwichCheck verify_sandwich(const EquivEstimate& est, std::uint64_t fresh, std::uint64_t seed) {
  Sampler sampler(seed);
  std::vector<GroupElement> points;
  points.reserve(fresh);
  for (std::uint64_t s = 0; s < fresh; ++s) {
    GroupElement v = sampler.gaussian_element(est.n);
    const double rho = std::pow(10.0, 4.0 * sampler.uniform() - 2.0);
    points.push_back(dilate(rho, v));
  }
  return verify_sandwich(est, points);
}

}  // namespace hq
