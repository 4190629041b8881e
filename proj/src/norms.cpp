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

#include "hq/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hq/errors.hpp"

namespace hq {

namespace {

double center_norm2(const GroupElement& v) {
  return v.t[0] * v.t[0] + v.t[1] * v.t[1] + v.t[2] * v.t[2];
}

std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

NormSpec NormSpec::alpha_family(double a) {
  if (!(a > 0.0)) throw DomainError("alpha norm requires alpha > 0, got " + shortest(a));
  return {NormFamily::Alpha, a};
}

NormSpec NormSpec::parse(std::string_view text) {
  if (text == "koranyi" || text == "k") return koranyi();
  if (text == "fs" || text == "folland-stein" || text == "folland_stein") return folland_stein();
  if (text == "box") return box();
  if (text == "max") return max();
  if (text.starts_with("alpha:")) {
    const auto digits = text.substr(6);
    double a = 0.0;
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), a);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) {
      throw ParseError("bad alpha exponent in norm family '" + std::string(text) + "'");
    }
    return alpha_family(a);
  }
  throw ParseError("unknown norm family '" + std::string(text) +
                   "' (expected koranyi|fs|alpha:<a>|box|max)");
}

std::string NormSpec::name() const {
  switch (family) {
    case NormFamily::Koranyi:
      return "koranyi";
    case NormFamily::FollandStein:
      return "fs";
    case NormFamily::Alpha:
      return "alpha:" + shortest(alpha);
    case NormFamily::Box:
      return "box";
    case NormFamily::Max:
      return "max";
  }
  return "?";
}

// sqrt(sqrt(x*x)) == sqrt(x) exactly in IEEE arithmetic, so with these
// compositions Koranyi and max agree bit-for-bit on purely horizontal and
// purely central points.

double koranyi(const GroupElement& v) {
  const double u2 = norm2(v.u);
  return std::sqrt(std::sqrt(u2 * u2 + center_norm2(v)));
}

double folland_stein(const GroupElement& v) {
  return std::sqrt(norm2(v.u) + std::sqrt(center_norm2(v)));
}

double alpha_norm(double alpha, const GroupElement& v) {
  if (!(alpha > 0.0)) throw DomainError("alpha norm requires alpha > 0, got " + shortest(alpha));
  const double s = std::pow(norm2(v.u), alpha / 2.0) + std::pow(center_norm2(v), alpha / 4.0);
  return std::pow(s, 1.0 / alpha);
}

double box_norm(const GroupElement& v) { return std::sqrt(norm2(v.u) + center_norm2(v)); }

double max_norm(const GroupElement& v) {
  return std::max(std::sqrt(norm2(v.u)), std::sqrt(std::sqrt(center_norm2(v))));
}

double eval(const NormSpec& spec, const GroupElement& v) {
  switch (spec.family) {
    case NormFamily::Koranyi:
      return koranyi(v);
    case NormFamily::FollandStein:
      return folland_stein(v);
    case NormFamily::Alpha:
      return alpha_norm(spec.alpha, v);
    case NormFamily::Box:
      return box_norm(v);
    case NormFamily::Max:
      return max_norm(v);
  }
  throw UnsupportedFamily("eval: unknown norm family");
}

double homogeneity_defect(const NormSpec& spec, const GroupElement& v, double rho) {
  return eval(spec, dilate(rho, v)) - rho * eval(spec, v);
}

double quasi_triangle_ratio(const NormSpec& spec, const GroupElement& a, const GroupElement& b) {
  const double denom = eval(spec, a) + eval(spec, b);
  if (denom == 0.0) throw DomainError("quasi_triangle_ratio: both operands are the identity");
  return eval(spec, gmul(a, b)) / denom;
}

double koranyi_quasi_triangle_bound() { return std::pow(24.0, 0.25); }

}  // namespace hq
