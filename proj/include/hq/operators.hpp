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

#ifndef HQ_OPERATORS_HPP_
#define HQ_OPERATORS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hq/polynomial.hpp"

namespace hq {

/// sum_k p_k d/dv_k over the seven coordinates of H^1 x R^3.
struct FirstOrderOperator {
  std::array<Polynomial, kNumVars> coeffs;

  static FirstOrderOperator partial(Var v);

  Polynomial apply(const Polynomial& f) const;
  bool is_zero() const;

  FirstOrderOperator& operator+=(const FirstOrderOperator& o);
  FirstOrderOperator& operator-=(const FirstOrderOperator& o);
  FirstOrderOperator& operator*=(const Rational& s);
  friend FirstOrderOperator operator+(FirstOrderOperator a, const FirstOrderOperator& b) {
    return a += b;
  }
  friend FirstOrderOperator operator-(FirstOrderOperator a, const FirstOrderOperator& b) {
    return a -= b;
  }
  friend FirstOrderOperator operator*(const Rational& s, FirstOrderOperator a) { return a *= s; }

  friend bool operator==(const FirstOrderOperator&, const FirstOrderOperator&) = default;

  /// "(-2*x1)*d/dt1 + d/dx0" style, one term per nonzero coefficient.
  std::string to_string() const;
};

/// sum_{i,j} a_ij d^2/dv_i dv_j + sum_k b_k d/dv_k with a symmetric.
struct SecondOrderOperator {
  std::array<std::array<Polynomial, kNumVars>, kNumVars> second;
  FirstOrderOperator first;

  Polynomial apply(const Polynomial& f) const;
  bool is_zero() const;

  SecondOrderOperator& operator+=(const SecondOrderOperator& o);
  SecondOrderOperator& operator-=(const SecondOrderOperator& o);
  SecondOrderOperator& operator*=(const Rational& s);
  friend SecondOrderOperator operator+(SecondOrderOperator a, const SecondOrderOperator& b) {
    return a += b;
  }
  friend SecondOrderOperator operator-(SecondOrderOperator a, const SecondOrderOperator& b) {
    return a -= b;
  }
  friend SecondOrderOperator operator*(const Rational& s, SecondOrderOperator a) { return a *= s; }

  friend bool operator==(const SecondOrderOperator&, const SecondOrderOperator&) = default;

  /// Coefficient multiplying d^2/dv_i dv_j in the expanded operator
  /// (a_ij + a_ji for i != j).
  Polynomial mixed_coefficient(Var i, Var j) const;

  /// One line per nonzero term, "d2/dx0dx0 : -1/4", mixed partials merged
  /// with i <= j, then first-order terms "d/dt1 : ...".
  std::string expansion() const;
};

/// A o B as a second-order operator.
SecondOrderOperator compose(const FirstOrderOperator& a, const FirstOrderOperator& b);

/// A B - B A; the second-order parts cancel exactly.
FirstOrderOperator commutator(const FirstOrderOperator& a, const FirstOrderOperator& b);

/// Basis X0, X1, X2, X3, T1, T2, T3 of left-invariant fields.
using Frame = std::array<FirstOrderOperator, kNumVars>;
inline constexpr std::array<std::string_view, kNumVars> kFieldNames = {"X0", "X1", "X2", "X3",
                                                                       "T1", "T2", "T3"};

/// The classical frame
///   X0 = d/dx0 - 2x1 T1 - 2x2 T2 - 2x3 T3
///   X1 = d/dx1 + 2x0 T1 - 2x3 T2 + 2x2 T3
///   X2 = d/dx2 + 2x3 T1 + 2x0 T2 - 2x1 T3
///   X3 = d/dx3 - 2x2 T1 + 2x1 T2 + 2x0 T3
/// with T_k = d/dt_k.
Frame standard_frame();

/// Left-invariant frame of gmul (ij = k convention), X_k = d/dx_k +
/// 2 Im(e_k conj(x)) . T. Shares X0 with standard_frame(); X1..X3 carry the
/// opposite sign on their cross terms.
Frame group_law_frame();

/// Field of standard_frame() by name "X0".."T3". Throws std::invalid_argument.
FirstOrderOperator vector_field(std::string_view name);

struct RelationCheck {
  std::string relation;
  FirstOrderOperator expected;
  FirstOrderOperator actual;
  bool pass = false;
};

/// Exact check of
///   [X0,X1] = [X3,X2] = 4T1, [X0,X2] = [X1,X3] = 4T2, [X0,X3] = [X2,X1] = 4T3,
/// plus [Xi,Xi] = 0 and [Tk, F] = 0 for every field F.
std::vector<RelationCheck> check_commutation_table(const Frame& frame = standard_frame());

/// [A,[B,C]] + [B,[C,A]] + [C,[A,B]] over all triples of horizontal fields.
std::vector<RelationCheck> check_jacobi(const Frame& frame = standard_frame());

/// [Xi,Xj] has constant coefficients supported on T1..T3, and [[Xi,Xj],Xk] = 0.
std::vector<RelationCheck> check_step_two(const Frame& frame = standard_frame());

/// X0^2 + X1^2 + X2^2 + X3^2.
SecondOrderOperator sum_of_squares(const Frame& frame = standard_frame());

/// -1/4 (X0^2 + X1^2 + X2^2 + X3^2).
SecondOrderOperator sublaplacian(const Frame& frame = standard_frame());

/// The commonly quoted closed form of -(X0^2 + ... + X3^2):
///   -Delta_x + 4|x|^2 Delta_t + (-x1 d0 + x0 d1 + x3 d2 - x2 d3) T1
///     + (-x2 d0 - x3 d1 + x0 d2 + x1 d3) T2 + (-x3 d0 + x2 d1 - x1 d2 + x0 d3) T3,
/// transcribed verbatim so it can be diffed against the exact expansion.
SecondOrderOperator quoted_negative_laplacian();

/// -(sum of squares) minus quoted_negative_laplacian(); zero iff the quoted
/// closed form is exact.
SecondOrderOperator quoted_laplacian_discrepancy();

}  // namespace hq

#endif  // HQ_OPERATORS_HPP_
