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

#include "hq/operators.hpp"

#include <gtest/gtest.h>

#include <array>
#include <string>

#include "hq/cc_metric.hpp"
#include "hq/group.hpp"
#include "hq/sampling.hpp"

namespace hq {
namespace {

Polynomial var(Var v) { return Polynomial::variable(v); }
Polynomial constant(int c) { return Polynomial::constant(c); }

FirstOrderOperator T(int k) { return FirstOrderOperator::partial(static_cast<Var>(4 + k - 1)); }

// Center coefficients c[i][k] of X_i = d/dx_i + sum_k c[i][k] T_k as integer
// multiples of x0..x3, copied from the frame definition.
constexpr std::array<std::array<std::array<int, 4>, 3>, 4> kCenterTable = {{
    {{{0, -2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}}},
    {{{2, 0, 0, 0}, {0, 0, 0, -2}, {0, 0, 2, 0}}},
    {{{0, 0, 0, 2}, {2, 0, 0, 0}, {0, -2, 0, 0}}},
    {{{0, 0, -2, 0}, {0, 2, 0, 0}, {2, 0, 0, 0}}},
}};

Polynomial center_coefficient(int i, int k) {
  Polynomial p;
  for (int m = 0; m < 4; ++m) p += var(static_cast<Var>(m)) * Rational(kCenterTable[i][k][m]);
  return p;
}

Polynomial random_polynomial(Sampler& s) {
  Polynomial p;
  for (int term = 0; term < 5; ++term) {
    Polynomial::Exponent e{};
    const int degree = static_cast<int>(s.uniform() * 4);
    for (int d = 0; d < degree; ++d) ++e[static_cast<int>(s.uniform() * kNumVars)];
    p += Polynomial::monomial(e, Rational(static_cast<int>(s.uniform() * 11) - 5));
  }
  return p;
}

TEST(VectorField, MatchesCenterTable) {
  const Frame f = standard_frame();
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(f[i].coeffs[i], constant(1));
    for (int k = 0; k < 3; ++k) EXPECT_EQ(f[i].coeffs[4 + k], center_coefficient(i, k));
  }
  for (int k = 0; k < 3; ++k) EXPECT_EQ(f[4 + k], T(k + 1));
}

TEST(VectorField, ApplyExamples) {
  EXPECT_EQ(vector_field("X0").apply(var(Var::x0)), constant(1));
  EXPECT_EQ(vector_field("X0").apply(var(Var::t1)), var(Var::x1) * Rational(-2));
  EXPECT_EQ(vector_field("X2").apply(var(Var::t3)), var(Var::x1) * Rational(-2));
  EXPECT_EQ(vector_field("T2").apply(var(Var::t2)), constant(1));
  EXPECT_EQ(vector_field("X3").apply(var(Var::t2)), var(Var::x1) * Rational(2));
  EXPECT_EQ(vector_field("X0").apply(var(Var::x1) * var(Var::t1)),
            var(Var::x1) * var(Var::x1) * Rational(-2));
  EXPECT_THROW(vector_field("X4"), std::invalid_argument);
}

TEST(VectorField, DerivationProperty) {
  Sampler s(61);
  const Frame frame = standard_frame();
  for (int r = 0; r < 40; ++r) {
    const Polynomial f = random_polynomial(s), g = random_polynomial(s);
    for (const auto& d : frame) EXPECT_EQ(d.apply(f * g), d.apply(f) * g + f * d.apply(g));
  }
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator(vector_field("X0"), vector_field("X1")), Rational(4) * T(1));
  EXPECT_EQ(commutator(vector_field("X1"), vector_field("X3")), Rational(4) * T(2));
  EXPECT_TRUE(commutator(vector_field("T1"), vector_field("X0")).is_zero());
  EXPECT_EQ(commutator(vector_field("X1"), vector_field("X2")), Rational(-4) * T(3));
}

TEST(Commutator, AgreesWithComposedOperators) {
  Sampler s(62);
  const Frame frame = standard_frame();
  for (int r = 0; r < 10; ++r) {
    const Polynomial f = random_polynomial(s);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const Polynomial direct =
            frame[a].apply(frame[b].apply(f)) - frame[b].apply(frame[a].apply(f));
        EXPECT_EQ(commutator(frame[a], frame[b]).apply(f), direct);
        EXPECT_EQ(compose(frame[a], frame[b]).apply(f), frame[a].apply(frame[b].apply(f)));
      }
    }
  }
}

TEST(CommutationTable, AllRelationsHold) {
  const auto table = check_commutation_table();
  EXPECT_EQ(table.size(), 6u + 4u + 21u);
  for (const auto& c : table) EXPECT_TRUE(c.pass) << c.relation;
}

TEST(CommutationTable, MutatedFieldIsReported) {
  Frame frame = standard_frame();
  frame[0].coeffs[4] = var(Var::x1) * Rational(-1);
  bool flagged = false;
  for (const auto& c : check_commutation_table(frame)) {
    if (c.relation.rfind("[X0,X1]", 0) == 0) {
      EXPECT_FALSE(c.pass);
      EXPECT_NE(c.actual, c.expected);
      flagged = true;
    }
  }
  EXPECT_TRUE(flagged);
}

TEST(CommutationTable, JacobiAndStepTwo) {
  for (const auto& frame : {standard_frame(), group_law_frame()}) {
    for (const auto& c : check_jacobi(frame)) EXPECT_TRUE(c.pass) << c.relation;
    for (const auto& c : check_step_two(frame)) EXPECT_TRUE(c.pass) << c.relation;
  }
}

TEST(GroupLawFrame, IsLeftInvariantForGmul) {
  const Frame frame = group_law_frame();
  EXPECT_EQ(frame[0], standard_frame()[0]);
  EXPECT_EQ(commutator(frame[1], frame[2]), Rational(4) * T(3));
  Sampler s(63);
  const std::array<Polynomial, 3> probes = {var(Var::t1), var(Var::t2), var(Var::t3)};
  for (int r = 0; r < 20; ++r) {
    const GroupElement g = s.gaussian_element(1);
    const std::array<double, kNumVars> at{g.u[0].w, g.u[0].x, g.u[0].y, g.u[0].z,
                                          g.t[0],   g.t[1],   g.t[2]};
    for (int i = 0; i < 4; ++i) {
      QTuple a(1);
      a[0][i] = 1.0;
      QTuple du(1);
      Vec3 dt{};
      horizontal_velocity(g.u, a, du, dt);
      for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(frame[i].apply(probes[k]).evaluate(at), dt[k], 1e-12) << i << k;
      }
    }
  }
}

TEST(SumOfSquares, MatchesCenterTableExpansion) {
  const SecondOrderOperator sos = sum_of_squares();
  Polynomial r2;
  for (int m = 0; m < 4; ++m) r2 += var(static_cast<Var>(m)) * var(static_cast<Var>(m));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(sos.mixed_coefficient(static_cast<Var>(i), static_cast<Var>(j)),
                i == j ? constant(1) : Polynomial());
    }
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(sos.mixed_coefficient(static_cast<Var>(i), static_cast<Var>(4 + k)),
                center_coefficient(i, k) * Rational(2));
    }
  }
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      EXPECT_EQ(sos.mixed_coefficient(static_cast<Var>(4 + k), static_cast<Var>(4 + l)),
                k == l ? r2 * Rational(4) : Polynomial());
    }
  }
  EXPECT_TRUE(sos.first.is_zero());
  EXPECT_TRUE(sos.apply(constant(1)).is_zero());
}

TEST(SubLaplacian, Examples) {
  const SecondOrderOperator l = sublaplacian();
  EXPECT_EQ((Rational(-4) * l).apply(var(Var::x0) * var(Var::x0)), constant(2));
  EXPECT_EQ(l, Rational(-1, 4) * sum_of_squares());
  const std::string text = l.expansion();
  EXPECT_EQ(text.substr(0, text.find('\n')), "d2/dx0dx0 : -1/4");
}

TEST(QuotedLaplacian, DiscrepancyIsExactlyKnown) {
  const SecondOrderOperator diff = quoted_laplacian_discrepancy();
  EXPECT_FALSE(diff.is_zero());
  Polynomial r2;
  for (int m = 0; m < 4; ++m) r2 += var(static_cast<Var>(m)) * var(static_cast<Var>(m));
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(diff.mixed_coefficient(static_cast<Var>(4 + k), static_cast<Var>(4 + k)),
              r2 * Rational(-8));
    for (int i = 0; i < 4; ++i) {
      // -2c from -(sum of squares) against the quoted c/2.
      EXPECT_EQ(diff.mixed_coefficient(static_cast<Var>(i), static_cast<Var>(4 + k)),
                center_coefficient(i, k) * Rational(-5, 2));
    }
  }
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(diff.mixed_coefficient(static_cast<Var>(i), static_cast<Var>(i)).is_zero());
  }
}

}  // namespace
}  // namespace hq
