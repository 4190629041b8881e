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

#ifndef HQ_NORMS_HPP_
#define HQ_NORMS_HPP_

#include <string>
#include <string_view>

#include "hq/group.hpp"

namespace hq {

enum class NormFamily { Koranyi, FollandStein, Alpha, Box, Max };

/// Choice of quasi-norm. `alpha` is meaningful only for NormFamily::Alpha.
struct NormSpec {
  NormFamily family = NormFamily::Koranyi;
  double alpha = 0.0;

  static NormSpec koranyi() { return {NormFamily::Koranyi, 0.0}; }
  static NormSpec folland_stein() { return {NormFamily::FollandStein, 0.0}; }
  static NormSpec alpha_family(double a);
  static NormSpec box() { return {NormFamily::Box, 0.0}; }
  static NormSpec max() { return {NormFamily::Max, 0.0}; }

  /// Parses "koranyi", "fs" (or "folland-stein"), "alpha:<a>", "box", "max".
  static NormSpec parse(std::string_view text);

  /// Inverse of parse: "koranyi", "fs", "alpha:<a>", "box", "max".
  std::string name() const;

  /// Degree-1 homogeneous under dilate(); false only for Box.
  bool homogeneous() const { return family != NormFamily::Box; }

  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

/// (|u|^4 + |t|^2)^(1/4)
double koranyi(const GroupElement& v);

/// (|u|^2 + |t|)^(1/2)
double folland_stein(const GroupElement& v);

/// (|u|^a + |t|^(a/2))^(1/a). Throws DomainError unless alpha > 0.
double alpha_norm(double alpha, const GroupElement& v);

/// (|u|^2 + |t|^2)^(1/2); not homogeneous under dilate().
double box_norm(const GroupElement& v);

/// max(|u|, |t|^(1/2))
double max_norm(const GroupElement& v);

double eval(const NormSpec& spec, const GroupElement& v);

/// eval(spec, dilate(rho, v)) - rho * eval(spec, v).
double homogeneity_defect(const NormSpec& spec, const GroupElement& v, double rho);

/// ||ab|| / (||a|| + ||b||). Throws DomainError when the denominator is zero.
double quasi_triangle_ratio(const NormSpec& spec, const GroupElement& a, const GroupElement& b);

/// Upper bound 24^(1/4) on the Koranyi quasi-triangle ratio, obtained by
/// chaining |q+q'|^4 <= 8(|q|^4+|q'|^4) with
/// |t+t'+2Im(q q'*)|^2 <= 2(|t|^2+|t'|^2+16|q|^2|q'|^2).
double koranyi_quasi_triangle_bound();

}  // namespace hq

#endif  // HQ_NORMS_HPP_
