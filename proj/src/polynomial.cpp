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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace hq {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"x0", "x1", "x2", "x3",
                                                              "t1", "t2", "t3"};

int total_degree(const Polynomial::Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

std::string_view var_name(int v) { return kVarNames.at(static_cast<std::size_t>(v)); }

Polynomial Polynomial::constant(const Rational& c) { return monomial(Exponent{}, c); }

Polynomial Polynomial::variable(Var v) {
  Exponent e{};
  e[static_cast<int>(v)] = 1;
  return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return total_degree(kv.first) == 0; });
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::derivative(Var v) const {
  const int k = static_cast<int>(v);
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent d = e;
    --d[k];
    out.add_term(d, c * e[k]);
  }
  return out;
}

double Polynomial::evaluate(std::span<const double, kNumVars> point) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.convert_to<double>();
    for (int k = 0; k < kNumVars; ++k) {
      for (int p = 0; p < e[k]; ++p) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e{};
      for (int k = 0; k < kNumVars; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first);
    const int db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    if (mag != 1 || total_degree(e) == 0) factors.push_back(mag.str());
    for (int k = 0; k < kNumVars; ++k) {
      if (e[k] == 0) continue;
      std::string f(kVarNames[k]);
      if (e[k] > 1) f += "^" + std::to_string(e[k]);
      factors.push_back(std::move(f));
    }
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

}  // namespace hq
