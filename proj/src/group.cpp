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

#include "hq/group.hpp"

#include <cmath>
#include <string>

#include "hq/errors.hpp"
#include "hq/sampling.hpp"

namespace hq {

bool GroupElement::is_identity() const {
  for (const auto& q : u) {
    if (q != Quaternion{}) return false;
  }
  return t == Vec3{0.0, 0.0, 0.0};
}

std::vector<double> to_coordinates(const GroupElement& g) {
  std::vector<double> c;
  c.reserve(coordinate_dimension(g.n()));
  for (const auto& q : g.u) {
    c.insert(c.end(), {q.w, q.x, q.y, q.z});
  }
  c.insert(c.end(), g.t.begin(), g.t.end());
  return c;
}

GroupElement from_coordinates(std::span<const double> coords) {
  if (coords.size() < 7 || (coords.size() - 3) % 4 != 0) {
    throw DimensionError("from_coordinates: expected 4n+3 values with n >= 1, got " +
                         std::to_string(coords.size()));
  }
  const std::size_t n = (coords.size() - 3) / 4;
  GroupElement g = GroupElement::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    g.u[j] = {coords[4 * j], coords[4 * j + 1], coords[4 * j + 2], coords[4 * j + 3]};
  }
  g.t = {coords[4 * n], coords[4 * n + 1], coords[4 * n + 2]};
  return g;
}

GroupElement gmul(const GroupElement& a, const GroupElement& b) {
  if (a.n() != b.n()) {
    throw DimensionError("gmul: operands live in H^" + std::to_string(a.n()) + " and H^" +
                         std::to_string(b.n()));
  }
  GroupElement out;
  out.u.resize(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) out.u[j] = a.u[j] + b.u[j];
  const Vec3 twist = qim(dot_bar(b.u, a.u));
  for (int c = 0; c < 3; ++c) out.t[c] = a.t[c] + b.t[c] + 2.0 * twist[c];
  return out;
}

GroupElement ginv(const GroupElement& a) {
  GroupElement out;
  out.u.reserve(a.n());
  for (const auto& q : a.u) out.u.push_back(-q);
  out.t = {-a.t[0], -a.t[1], -a.t[2]};
  return out;
}

GroupElement dilate(double rho, const GroupElement& a) {
  if (!(rho > 0.0)) {
    throw DomainError("dilate: scale factor must be positive, got " + std::to_string(rho));
  }
  GroupElement out;
  out.u.reserve(a.n());
  for (const auto& q : a.u) out.u.push_back(rho * q);
  const double rho2 = rho * rho;
  out.t = {rho2 * a.t[0], rho2 * a.t[1], rho2 * a.t[2]};
  return out;
}

GroupElement dilate_sqrt_convention(double rho, const GroupElement& a) {
  if (!(rho > 0.0)) {
    throw DomainError("dilate_sqrt_convention: scale factor must be positive, got " +
                      std::to_string(rho));
  }
  return dilate(std::sqrt(rho), a);
}

namespace {

bool in_unit_box(const GroupElement& g) {
  for (double c : to_coordinates(g)) {
    if (c < 0.0 || c >= 1.0) return false;
  }
  return true;
}

// Side lengths of the padded box enclosing dilate(rho, [0,1]^d).
std::vector<double> enclosing_sides(double rho, std::size_t n, double pad) {
  std::vector<double> sides(coordinate_dimension(n), pad * rho);
  for (std::size_t c = 4 * n; c < sides.size(); ++c) sides[c] = pad * rho * rho;
  return sides;
}

}  // namespace

HaarScaling haar_scaling_check(double rho, int n, std::uint64_t samples, std::uint64_t seed) {
  if (!(rho > 0.0)) throw DomainError("haar_scaling_check: rho must be positive");
  if (n < 1) throw DomainError("haar_scaling_check: n must be at least 1");
  if (samples < 1) throw DomainError("haar_scaling_check: need at least one sample");

  const auto un = static_cast<std::size_t>(n);
  const std::size_t dim = coordinate_dimension(un);
  const double pad = std::pow(2.0, 1.0 / static_cast<double>(dim));

  const auto unit_sides = enclosing_sides(1.0, un, pad);
  const auto scaled_sides = enclosing_sides(rho, un, pad);
  double unit_volume = 1.0;
  double scaled_volume = 1.0;
  for (std::size_t c = 0; c < dim; ++c) {
    unit_volume *= unit_sides[c];
    scaled_volume *= scaled_sides[c];
  }

  Sampler sampler(seed);
  std::vector<double> draw(dim);
  std::vector<double> coords(dim);
  auto place = [&](const std::vector<double>& sides) {
    for (std::size_t c = 0; c < dim; ++c) coords[c] = sides[c] * draw[c];
    return from_coordinates(coords);
  };

  std::uint64_t unit_hits = 0;
  std::uint64_t scaled_hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (double& d : draw) d = sampler.uniform();
    if (in_unit_box(place(unit_sides))) ++unit_hits;
    if (in_unit_box(dilate(1.0 / rho, place(scaled_sides)))) ++scaled_hits;
  }

  HaarScaling out;
  out.exact_ratio = std::pow(rho, homogeneous_dimension(n));
  out.empirical_ratio = unit_hits == 0
                            ? 0.0
                            : (static_cast<double>(scaled_hits) * scaled_volume) /
                                  (static_cast<double>(unit_hits) * unit_volume);
  return out;
}

}  // namespace hq
