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

#ifndef HQ_QUATERNION_HPP_
#define HQ_QUATERNION_HPP_

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace hq {

using Vec3 = std::array<double, 3>;

/// Real quaternion w + x i + y j + z k with the Hamilton convention
/// i^2 = j^2 = k^2 = ijk = -1 (so ij = k).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Component `c` in (w, x, y, z) order.
  constexpr double operator[](int c) const {
    return c == 0 ? w : c == 1 ? x : c == 2 ? y : z;
  }
  constexpr double& operator[](int c) {
    return c == 0 ? w : c == 1 ? x : c == 2 ? y : z;
  }

  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

constexpr Quaternion qconj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Imaginary part as a point of R^3; zero iff `a` is real.
constexpr Vec3 qim(const Quaternion& a) { return {a.x, a.y, a.z}; }

/// Ordered tuple (q_1, ..., q_n) of quaternions; the horizontal coordinates
/// of a group element.
using QTuple = std::vector<Quaternion>;

/// sum_j |q_j|^2.
double norm2(std::span<const Quaternion> u);

/// sum_j r_j conj(u_j). Throws DimensionError on length mismatch.
Quaternion dot_bar(std::span<const Quaternion> r, std::span<const Quaternion> u);

}  // namespace hq

#endif  // HQ_QUATERNION_HPP_
