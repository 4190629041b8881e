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

#include <sstream>
#include <stdexcept>

#include "hq/quaternion.hpp"

namespace hq {

namespace {

Var var(int k) { return static_cast<Var>(k); }

Polynomial x(int k) { return Polynomial::variable(var(k)); }

Polynomial c(long long v) { return Polynomial::constant(Rational(v)); }

std::string partial_name(int k) { return "d/d" + std::string(var_name(k)); }

}  // namespace

// FirstOrderOperator

FirstOrderOperator FirstOrderOperator::partial(Var v) {
  FirstOrderOperator d;
  d.coeffs[static_cast<int>(v)] = Polynomial::constant(Rational(1));
  return d;
}

Polynomial FirstOrderOperator::apply(const Polynomial& f) const {
  Polynomial out;
  for (int k = 0; k < kNumVars; ++k) {
    if (!coeffs[k].is_zero()) out += coeffs[k] * f.derivative(var(k));
  }
  return out;
}

bool FirstOrderOperator::is_zero() const {
  for (const auto& p : coeffs) {
    if (!p.is_zero()) return false;
  }
  return true;
}

FirstOrderOperator& FirstOrderOperator::operator+=(const FirstOrderOperator& o) {
  for (int k = 0; k < kNumVars; ++k) coeffs[k] += o.coeffs[k];
  return *this;
}

FirstOrderOperator& FirstOrderOperator::operator-=(const FirstOrderOperator& o) {
  for (int k = 0; k < kNumVars; ++k) coeffs[k] -= o.coeffs[k];
  return *this;
}

FirstOrderOperator& FirstOrderOperator::operator*=(const Rational& s) {
  for (auto& p : coeffs) p *= s;
  return *this;
}

std::string FirstOrderOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kNumVars; ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (coeffs[k] == Polynomial::constant(Rational(1))) {
      os << partial_name(k);
    } else {
      os << '(' << coeffs[k].to_string() << ")*" << partial_name(k);
    }
  }
  return first ? "0" : os.str();
}

// SecondOrderOperator

Polynomial SecondOrderOperator::apply(const Polynomial& f) const {
  Polynomial out = first.apply(f);
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = 0; j < kNumVars; ++j) {
      if (second[i][j].is_zero()) continue;
      out += second[i][j] * f.derivative(var(i)).derivative(var(j));
    }
  }
  return out;
}

bool SecondOrderOperator::is_zero() const {
  for (const auto& row : second) {
    for (const auto& p : row) {
      if (!p.is_zero()) return false;
    }
  }
  return first.is_zero();
}

SecondOrderOperator& SecondOrderOperator::operator+=(const SecondOrderOperator& o) {
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = 0; j < kNumVars; ++j) second[i][j] += o.second[i][j];
  }
  first += o.first;
  return *this;
}

SecondOrderOperator& SecondOrderOperator::operator-=(const SecondOrderOperator& o) {
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = 0; j < kNumVars; ++j) second[i][j] -= o.second[i][j];
  }
  first -= o.first;
  return *this;
}

SecondOrderOperator& SecondOrderOperator::operator*=(const Rational& s) {
  for (auto& row : second) {
    for (auto& p : row) p *= s;
  }
  first *= s;
  return *this;
}

Polynomial SecondOrderOperator::mixed_coefficient(Var i, Var j) const {
  const int a = static_cast<int>(i);
  const int b = static_cast<int>(j);
  return a == b ? second[a][a] : second[a][b] + second[b][a];
}

std::string SecondOrderOperator::expansion() const {
  std::ostringstream os;
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = i; j < kNumVars; ++j) {
      const Polynomial p = mixed_coefficient(var(i), var(j));
      if (p.is_zero()) continue;
      os << "d2/d" << var_name(i) << 'd' << var_name(j) << " : " << p.to_string() << '\n';
    }
  }
  for (int k = 0; k < kNumVars; ++k) {
    if (first.coeffs[k].is_zero()) continue;
    os << partial_name(k) << " : " << first.coeffs[k].to_string() << '\n';
  }
  return os.str();
}

SecondOrderOperator compose(const FirstOrderOperator& a, const FirstOrderOperator& b) {
  SecondOrderOperator out;
  const Rational half(1, 2);
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = 0; j < kNumVars; ++j) {
      out.second[i][j] = half * (a.coeffs[i] * b.coeffs[j] + a.coeffs[j] * b.coeffs[i]);
    }
  }
  for (int j = 0; j < kNumVars; ++j) out.first.coeffs[j] = a.apply(b.coeffs[j]);
  return out;
}

FirstOrderOperator commutator(const FirstOrderOperator& a, const FirstOrderOperator& b) {
  FirstOrderOperator out;
  for (int j = 0; j < kNumVars; ++j) out.coeffs[j] = a.apply(b.coeffs[j]) - b.apply(a.coeffs[j]);
  return out;
}

// Frames

Frame standard_frame() {
  using V = Var;
  auto field = [](int k, Polynomial c1, Polynomial c2, Polynomial c3) {
    FirstOrderOperator f = FirstOrderOperator::partial(var(k));
    f.coeffs[static_cast<int>(V::t1)] = std::move(c1);
    f.coeffs[static_cast<int>(V::t2)] = std::move(c2);
    f.coeffs[static_cast<int>(V::t3)] = std::move(c3);
    return f;
  };
  const Rational two(2);
  return {field(0, -two * x(1), -two * x(2), -two * x(3)),
          field(1, two * x(0), -two * x(3), two * x(2)),
          field(2, two * x(3), two * x(0), -two * x(1)),
          field(3, -two * x(2), two * x(1), two * x(0)),
          FirstOrderOperator::partial(V::t1),
          FirstOrderOperator::partial(V::t2),
          FirstOrderOperator::partial(V::t3)};
}

Frame group_law_frame() {
  // Im(e_k conj(x)) is linear in x; read its coefficients off the basis.
  static constexpr std::array<Quaternion, 4> kBasis = {Quaternion::real(1.0), Quaternion::i(),
                                                       Quaternion::j(), Quaternion::k()};
  Frame frame;
  for (int k = 0; k < 4; ++k) {
    FirstOrderOperator f = FirstOrderOperator::partial(var(k));
    for (int m = 0; m < 4; ++m) {
      const Vec3 im = qim(qmul(kBasis[k], qconj(kBasis[m])));
      for (int cc = 0; cc < 3; ++cc) {
        const auto coefficient = static_cast<long long>(2.0 * im[cc]);
        if (coefficient != 0) f.coeffs[4 + cc] += Rational(coefficient) * x(m);
      }
    }
    frame[k] = std::move(f);
  }
  for (int k = 4; k < kNumVars; ++k) frame[k] = FirstOrderOperator::partial(var(k));
  return frame;
}

FirstOrderOperator vector_field(std::string_view name) {
  for (int k = 0; k < kNumVars; ++k) {
    if (kFieldNames[k] == name) return standard_frame()[k];
  }
  throw std::invalid_argument("unknown vector field '" + std::string(name) +
                              "' (expected X0..X3 or T1..T3)");
}

// Checks

namespace {

std::string bracket(int a, int b) {
  return "[" + std::string(kFieldNames[a]) + "," + std::string(kFieldNames[b]) + "]";
}

RelationCheck relation(std::string label, FirstOrderOperator expected, FirstOrderOperator actual) {
  const bool pass = expected == actual;
  return {std::move(label), std::move(expected), std::move(actual), pass};
}

}  // namespace

std::vector<RelationCheck> check_commutation_table(const Frame& frame) {
  std::vector<RelationCheck> out;
  auto four_t = [&](int k) { return Rational(4) * frame[4 + k]; };

  struct Stated {
    int a, b, t;
  };
  // [X0,X1] = [X3,X2] = 4T1, [X0,X2] = [X1,X3] = 4T2, [X0,X3] = [X2,X1] = 4T3
  constexpr Stated kStated[] = {{0, 1, 0}, {3, 2, 0}, {0, 2, 1}, {1, 3, 1}, {0, 3, 2}, {2, 1, 2}};
  for (const auto& s : kStated) {
    out.push_back(relation(bracket(s.a, s.b) + " = 4" + std::string(kFieldNames[4 + s.t]),
                           four_t(s.t), commutator(frame[s.a], frame[s.b])));
  }
  for (int a = 0; a < 4; ++a) {
    out.push_back(relation(bracket(a, a) + " = 0", {}, commutator(frame[a], frame[a])));
  }
  for (int k = 4; k < kNumVars; ++k) {
    for (int b = 0; b < kNumVars; ++b) {
      out.push_back(relation(bracket(k, b) + " = 0", {}, commutator(frame[k], frame[b])));
    }
  }
  return out;
}

std::vector<RelationCheck> check_jacobi(const Frame& frame) {
  std::vector<RelationCheck> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int cc = b + 1; cc < 4; ++cc) {
        const FirstOrderOperator sum =
            commutator(frame[a], commutator(frame[b], frame[cc])) +
            commutator(frame[b], commutator(frame[cc], frame[a])) +
            commutator(frame[cc], commutator(frame[a], frame[b]));
        out.push_back(relation("Jacobi(" + std::string(kFieldNames[a]) + "," +
                                   std::string(kFieldNames[b]) + "," +
                                   std::string(kFieldNames[cc]) + ") = 0",
                               {}, sum));
      }
    }
  }
  return out;
}

std::vector<RelationCheck> check_step_two(const Frame& frame) {
  std::vector<RelationCheck> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const FirstOrderOperator ab = commutator(frame[a], frame[b]);
      // Project onto constant combinations of T1..T3 and compare.
      FirstOrderOperator central;
      for (int k = 4; k < kNumVars; ++k) {
        if (ab.coeffs[k].is_constant()) central.coeffs[k] = ab.coeffs[k];
      }
      out.push_back(relation(bracket(a, b) + " in span_R{T1,T2,T3}", central, ab));
      for (int cc = 0; cc < 4; ++cc) {
        out.push_back(relation("[" + bracket(a, b) + "," + std::string(kFieldNames[cc]) + "] = 0",
                               {}, commutator(ab, frame[cc])));
      }
    }
  }
  return out;
}

SecondOrderOperator sum_of_squares(const Frame& frame) {
  SecondOrderOperator out;
  for (int a = 0; a < 4; ++a) out += compose(frame[a], frame[a]);
  return out;
}

SecondOrderOperator sublaplacian(const Frame& frame) {
  return Rational(-1, 4) * sum_of_squares(frame);
}

SecondOrderOperator quoted_negative_laplacian() {
  SecondOrderOperator op;
  for (int a = 0; a < 4; ++a) op.second[a][a] = c(-1);
  const Polynomial radius2 = x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + x(3) * x(3);
  for (int k = 4; k < kNumVars; ++k) op.second[k][k] = Rational(4) * radius2;

  // (sum_a p_a d/dx_a) T_k, stored symmetrically.
  auto add_mixed = [&](int t, std::array<Polynomial, 4> p) {
    for (int a = 0; a < 4; ++a) {
      op.second[a][t] += Rational(1, 2) * p[a];
      op.second[t][a] += Rational(1, 2) * p[a];
    }
  };
  add_mixed(4, {-x(1), x(0), x(3), -x(2)});
  add_mixed(5, {-x(2), -x(3), x(0), x(1)});
  add_mixed(6, {-x(3), x(2), -x(1), x(0)});
  return op;
}

SecondOrderOperator quoted_laplacian_discrepancy() {
  return Rational(-1) * sum_of_squares(standard_frame()) - quoted_negative_laplacian();
}

}  // namespace hq
