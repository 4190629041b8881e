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

#include "hq/polynomial.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "hq/sampling.hpp"

namespace hq {
namespace {

Polynomial var(Var v) { return Polynomial::variable(v); }

Polynomial random_polynomial(Sampler& s, int max_degree) {
  Polynomial p;
  for (int term = 0; term < 6; ++term) {
    Polynomial::Exponent e{};
    const int degree = static_cast<int>(s.uniform() * (max_degree + 1));
    for (int d = 0; d < degree; ++d) ++e[static_cast<int>(s.uniform() * kNumVars)];
    const int num = static_cast<int>(s.uniform() * 19) - 9;
    const int den = 1 + static_cast<int>(s.uniform() * 4);
    p += Polynomial::monomial(e, Rational(num, den));
  }
  return p;
}

TEST(Polynomial, ZeroCoefficientsAreDropped) {
  const Polynomial p = var(Var::x0) - var(Var::x0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, Polynomial());
  EXPECT_EQ(p.to_string(), "0");
  EXPECT_TRUE(Polynomial::monomial({1, 0, 0, 0, 0, 0, 0}, 0).is_zero());
}

TEST(Polynomial, Arithmetic) {
  const Polynomial x1 = var(Var::x1), t1 = var(Var::t1);
  const Polynomial p = x1 * t1 * Rational(4) - x1 * Rational(2);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient({0, 1, 0, 0, 1, 0, 0}), Rational(4));
  EXPECT_EQ(p.coefficient({0, 1, 0, 0, 0, 0, 0}), Rational(-2));
  EXPECT_EQ(p.coefficient({1, 0, 0, 0, 0, 0, 0}), Rational(0));
  EXPECT_EQ(p.to_string(), "-2*x1 + 4*x1*t1");
  EXPECT_EQ((x1 + Polynomial::constant(Rational(1, 2))) * (x1 - Polynomial::constant(Rational(1, 2))),
            x1 * x1 - Polynomial::constant(Rational(1, 4)));
  EXPECT_TRUE(Polynomial::constant(3).is_constant());
  EXPECT_FALSE(x1.is_constant());
}

TEST(Polynomial, ToStringOrdering) {
  const Polynomial p = var(Var::x1) * var(Var::x1) + var(Var::x0) * var(Var::x0) +
                       Polynomial::constant(Rational(-1, 3)) + var(Var::t3);
  EXPECT_EQ(p.to_string(), "-1/3 + t3 + x0^2 + x1^2");
}

TEST(Polynomial, Derivative) {
  const Polynomial p = var(Var::x0) * var(Var::x0) * var(Var::t2) + var(Var::x3) * Rational(5);
  EXPECT_EQ(p.derivative(Var::x0), var(Var::x0) * var(Var::t2) * Rational(2));
  EXPECT_EQ(p.derivative(Var::x3), Polynomial::constant(5));
  EXPECT_TRUE(p.derivative(Var::t1).is_zero());
}

TEST(Polynomial, EvaluateMatchesDirectComputation) {
  const Polynomial p = var(Var::x0) * var(Var::x0) * var(Var::t2) * Rational(3, 2) -
                       var(Var::x3) + Polynomial::constant(7);
  const std::array<double, kNumVars> at{2.0, 0.0, 0.0, -1.5, 0.0, 0.25, 0.0};
  EXPECT_DOUBLE_EQ(p.evaluate(at), 1.5 * 4 * 0.25 + 1.5 + 7);
}

TEST(Polynomial, RingLaws) {
  Sampler s(51);
  for (int r = 0; r < 50; ++r) {
    const Polynomial a = random_polynomial(s, 3), b = random_polynomial(s, 3),
                     c = random_polynomial(s, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).derivative(Var::x2), a.derivative(Var::x2) * b + a * b.derivative(Var::x2));
  }
}

TEST(Polynomial, EvaluateIsRingHomomorphism) {
  Sampler s(52);
  for (int r = 0; r < 50; ++r) {
    const Polynomial a = random_polynomial(s, 3), b = random_polynomial(s, 3);
    std::array<double, kNumVars> at{};
    for (double& v : at) v = s.normal();
    const double fa = a.evaluate(at), fb = b.evaluate(at);
    EXPECT_NEAR((a * b).evaluate(at), fa * fb, 1e-9 * (1 + std::abs(fa * fb)));
    EXPECT_NEAR((a + b).evaluate(at), fa + fb, 1e-12 * (1 + std::abs(fa) + std::abs(fb)));
  }
}

}  // namespace
}  // namespace hq
