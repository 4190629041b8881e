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

#ifndef HQ_POLYNOMIAL_HPP_
#define HQ_POLYNOMIAL_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hq {

using Rational = boost::multiprecision::cpp_rational;

/// Coordinates of H^1 x R^3 in the order used by all symbolic code.
enum class Var : int { x0 = 0, x1, x2, x3, t1, t2, t3 };
inline constexpr int kNumVars = 7;

std::string_view var_name(int v);

/// Sparse polynomial in x0..x3, t1..t3 with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is equality.
class Polynomial {
 public:
  using Exponent = std::array<std::uint8_t, kNumVars>;

  Polynomial() = default;

  static Polynomial constant(const Rational& c);
  static Polynomial variable(Var v);
  static Polynomial monomial(const Exponent& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial has no non-constant terms.
  bool is_constant() const;
  int degree() const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  /// Coefficient of the monomial with exponent `e` (zero if absent).
  Rational coefficient(const Exponent& e) const;

  Polynomial derivative(Var v) const;
  double evaluate(std::span<const double, kNumVars> point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Monomials sorted by total degree, then by exponent (x0 first), e.g.
  /// "-2*x1 + 4*x0^2*t1". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  std::map<Exponent, Rational> terms_;
};

}  // namespace hq

#endif  // HQ_POLYNOMIAL_HPP_
