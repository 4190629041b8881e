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

#include <gtest/gtest.h>

#include <cmath>

#include "hq/errors.hpp"
#include "hq/sampling.hpp"
#include "test_support.hpp"

namespace hq {
namespace {

using testing::max_abs_diff;

TEST(Group, IdentityIsNeutral) {
  Sampler s(1);
  const GroupElement v = s.gaussian_element(2);
  EXPECT_EQ(gmul(GroupElement::identity(2), v), v);
  EXPECT_EQ(gmul(v, GroupElement::identity(2)), v);
}

TEST(Group, ProductExample) {
  const GroupElement a{{Quaternion::real(1)}, {0, 0, 0}};
  const GroupElement b{{Quaternion::i()}, {0, 0, 0}};
  const GroupElement expected{{Quaternion{1, 1, 0, 0}}, {2, 0, 0}};
  EXPECT_EQ(gmul(a, b), expected);
}

TEST(Group, ProductMatchesOracle) {
  Sampler s(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int r = 0; r < 300; ++r) {
      const GroupElement a = s.gaussian_element(n), b = s.gaussian_element(n);
      EXPECT_LE(max_abs_diff(gmul(a, b), testing::oracle_gmul(a, b)), 1e-12);
    }
  }
}

TEST(Group, InverseExamples) {
  EXPECT_EQ(ginv(GroupElement::identity(1)), GroupElement::identity(1));
  const GroupElement v{{Quaternion{1, 1, 0, 0}}, {2, 0, 0}};
  const GroupElement expected{{Quaternion{-1, -1, 0, 0}}, {-2, 0, 0}};
  EXPECT_EQ(ginv(v), expected);
}

TEST(Group, InverseAndAssociativityLaws) {
  Sampler s(3);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int r = 0; r < 300; ++r) {
      const GroupElement a = s.gaussian_element(n), b = s.gaussian_element(n),
                         c = s.gaussian_element(n);
      EXPECT_LE(max_abs_diff(gmul(a, ginv(a)), GroupElement::identity(n)), 1e-12);
      EXPECT_LE(max_abs_diff(gmul(ginv(a), gmul(a, b)), b), 1e-12);
      EXPECT_LE(max_abs_diff(gmul(gmul(a, b), c), gmul(a, gmul(b, c))), 1e-11);
    }
  }
}

TEST(Group, CenterCommutesWithEverything) {
  Sampler s(4);
  const GroupElement a = s.gaussian_element(2);
  GroupElement z = GroupElement::identity(2);
  z.t = {0.3, -1.2, 2.0};
  EXPECT_LE(max_abs_diff(gmul(a, z), gmul(z, a)), 1e-14);
}

TEST(Dilation, Examples) {
  Sampler s(5);
  const GroupElement v = s.gaussian_element(1);
  EXPECT_EQ(dilate(1.0, v), v);
  const GroupElement p{{Quaternion::real(1)}, {1, 0, 0}};
  const GroupElement expected{{Quaternion::real(2)}, {4, 0, 0}};
  EXPECT_EQ(dilate(2.0, p), expected);
}

TEST(Dilation, NonPositiveRhoThrows) {
  const GroupElement v = GroupElement::identity(1);
  EXPECT_THROW(dilate(0.0, v), DomainError);
  EXPECT_THROW(dilate(-1.0, v), DomainError);
  EXPECT_THROW(dilate(std::nan(""), v), DomainError);
}

TEST(Dilation, IsAutomorphism) {
  Sampler s(6);
  for (double rho : {0.5, 1.0, 2.0, 10.0}) {
    for (int r = 0; r < 200; ++r) {
      const GroupElement a = s.gaussian_element(2), b = s.gaussian_element(2);
      const GroupElement lhs = gmul(dilate(rho, a), dilate(rho, b));
      const GroupElement rhs = dilate(rho, gmul(a, b));
      EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12 * rho * rho * 10);
    }
  }
}

TEST(Dilation, SqrtConventionReparameterizes) {
  Sampler s(7);
  const GroupElement v = s.gaussian_element(1);
  EXPECT_LE(max_abs_diff(dilate_sqrt_convention(4.0, v), dilate(2.0, v)), 1e-15);
}

TEST(Coordinates, RoundTrip) {
  Sampler s(8);
  const GroupElement v = s.gaussian_element(3);
  const auto c = to_coordinates(v);
  ASSERT_EQ(c.size(), coordinate_dimension(3));
  EXPECT_EQ(from_coordinates(c), v);
  const std::vector<double> bad(8);
  EXPECT_THROW(from_coordinates(bad), DimensionError);
}

TEST(Haar, Exponent) {
  EXPECT_EQ(homogeneous_dimension(1), 10);
  EXPECT_EQ(homogeneous_dimension(2), 14);
  EXPECT_EQ(homogeneous_dimension(3), 18);
}

TEST(Haar, ExactRatioExamples) {
  const HaarScaling one = haar_scaling_check(1.0, 1, 1000, 0);
  EXPECT_EQ(one.exact_ratio, 1.0);
  EXPECT_NEAR(one.empirical_ratio, 1.0, 1e-12);
  EXPECT_EQ(haar_scaling_check(2.0, 1, 1000, 0).exact_ratio, 1024.0);
  EXPECT_EQ(haar_scaling_check(3.0, 2, 1000, 0).exact_ratio, std::pow(3.0, 14));
}

TEST(Haar, MonteCarloMatchesExponent) {
  for (int n : {1, 2}) {
    const HaarScaling h = haar_scaling_check(2.0, n, 200000, 5);
    EXPECT_NEAR(h.empirical_ratio / h.exact_ratio, 1.0, 0.02) << "n=" << n;
  }
}

TEST(Haar, DeterministicInSeed) {
  EXPECT_EQ(haar_scaling_check(1.5, 1, 10000, 9).empirical_ratio,
            haar_scaling_check(1.5, 1, 10000, 9).empirical_ratio);
}

TEST(Haar, InvalidArgumentsThrow) {
  EXPECT_ANY_THROW(haar_scaling_check(0.0, 1, 10, 0));
  EXPECT_ANY_THROW(haar_scaling_check(2.0, 0, 10, 0));
  EXPECT_ANY_THROW(haar_scaling_check(2.0, 1, 0, 0));
}

}  // namespace
}  // namespace hq
