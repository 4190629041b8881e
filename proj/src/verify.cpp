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

#include "hq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hq/cc_metric.hpp"
#include "hq/equivalence.hpp"
#include "hq/norms.hpp"
#include "hq/operators.hpp"
#include "hq/sampling.hpp"

namespace hq {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::ExpectedFailure:
      return "expected-failure";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const VerifyCheck& c) { return c.status == CheckStatus::Fail; });
}

const VerifyCheck* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j{{"name", c.name},
           {"status", hq::to_string(c.status)},
           {"measured", c.measured},
           {"tolerance", c.tolerance},
           {"criterion", c.criterion}};
    j["witness"] = c.witness ? hq::to_json(*c.witness) : Json(nullptr);
    list.push_back(std::move(j));
  }
  return Json{{"passed", passed()}, {"checks", std::move(list)}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    std::string status = hq::to_string(c.status);
    status.resize(18, ' ');
    os << status << c.name << "  measured=" << format_number(c.measured) << "  ("
       << c.criterion << ")\n";
  }
  os << (passed() ? "all checks passed" : "FAILED") << '\n';
  return os.str();
}

namespace {

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

VerifyCheck at_most(std::string name, double measured, double tolerance,
                    std::optional<GroupElement> witness = std::nullopt) {
  VerifyCheck c{std::move(name), CheckStatus::Fail, measured, tolerance,
                "measured <= " + short_number(tolerance), std::move(witness)};
  if (measured <= tolerance) c.status = CheckStatus::Pass;
  return c;
}

VerifyCheck at_least(std::string name, double measured, double threshold,
                     std::optional<GroupElement> witness = std::nullopt) {
  VerifyCheck c{std::move(name), CheckStatus::Fail, measured, threshold,
                "measured >= " + short_number(threshold), std::move(witness)};
  if (measured >= threshold) c.status = CheckStatus::Pass;
  return c;
}

VerifyCheck within(std::string name, double measured, double lo, double hi) {
  VerifyCheck c{std::move(name), CheckStatus::Fail, measured, hi - lo,
                "measured in [" + short_number(lo) + ", " + short_number(hi) + "]", std::nullopt};
  if (measured >= lo && measured <= hi) c.status = CheckStatus::Pass;
  return c;
}

// A property that is known to fail; passing would contradict the theory.
VerifyCheck expected_failure(VerifyCheck c) {
  c.status = c.status == CheckStatus::Fail ? CheckStatus::ExpectedFailure : CheckStatus::Fail;
  c.criterion = "expected to violate: " + c.criterion;
  return c;
}

double max_abs_difference(const GroupElement& a, const GroupElement& b) {
  const auto ca = to_coordinates(a);
  const auto cb = to_coordinates(b);
  double m = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) m = std::max(m, std::fabs(ca[i] - cb[i]));
  return m;
}

double max_abs(const GroupElement& a) {
  double m = 0.0;
  for (double c : to_coordinates(a)) m = std::max(m, std::fabs(c));
  return m;
}

Quaternion random_quaternion(Sampler& s) { return {s.normal(), s.normal(), s.normal(), s.normal()}; }

GroupElement random_scaled(Sampler& s, std::size_t n) {
  const double rho = std::pow(10.0, 2.0 * s.uniform() - 1.0);
  return dilate(rho, s.gaussian_element(n));
}

class Suite {
 public:
  explicit Suite(const VerifyConfig& config) : config_(config) {}

  VerifyReport run() {
    run_module("quaternion", [this] { quaternion_checks(); });
    run_module("group", [this] { group_checks(); });
    run_module("norms", [this] { norm_checks(); });
    run_module("equivalence", [this] { equivalence_checks(); });
    run_module("cc", [this] { cc_checks(); });
    run_module("ops", [this] { operator_checks(); });
    return std::move(report_);
  }

 private:
  void run_module(const std::string& name, const std::function<void()>& body) {
    if (config_.modules.empty() ||
        std::find(config_.modules.begin(), config_.modules.end(), name) != config_.modules.end()) {
      body();
    }
  }

  void add(VerifyCheck c) { report_.checks.push_back(std::move(c)); }

  std::uint64_t seed(std::uint64_t stream) const { return mix_seed(config_.seed, stream); }

  void quaternion_checks() {
    Sampler s(seed(1));
    double mult = 0.0;
    double self = 0.0;
    double assoc = 0.0;
    for (std::uint64_t i = 0; i < config_.samples; ++i) {
      const Quaternion a = random_quaternion(s);
      const Quaternion b = random_quaternion(s);
      const Quaternion c = random_quaternion(s);
      mult = std::max(mult, std::fabs(qmul(a, b).norm() - a.norm() * b.norm()) /
                                (a.norm() * b.norm()));
      const Quaternion l = qmul(qmul(a, b), c);
      const Quaternion r = qmul(a, qmul(b, c));
      assoc = std::max(assoc, (l - r).norm() / (a.norm() * b.norm() * c.norm()));
      const QTuple u = s.gaussian_element(config_.n).u;
      const Vec3 im = qim(dot_bar(u, u));
      self = std::max({self, std::fabs(im[0]), std::fabs(im[1]), std::fabs(im[2])});
    }
    add(at_most("quaternion.norm_multiplicative", mult, 1e-12));
    add(at_most("quaternion.dot_bar_self_real", self, 1e-12));
    add(at_most("quaternion.associative", assoc, 1e-12));
  }

  void group_checks() {
    Sampler s(seed(2));
    const std::size_t n = config_.n;
    const std::uint64_t triples = std::max<std::uint64_t>(config_.samples / 10, 10000);
    double assoc = 0.0;
    double inverse = 0.0;
    double automorphism = 0.0;
    for (std::uint64_t i = 0; i < triples; ++i) {
      const GroupElement a = s.gaussian_element(n);
      const GroupElement b = s.gaussian_element(n);
      const GroupElement c = s.gaussian_element(n);
      assoc = std::max(assoc, max_abs_difference(gmul(gmul(a, b), c), gmul(a, gmul(b, c))));
      inverse = std::max({inverse, max_abs(gmul(a, ginv(a))), max_abs(gmul(ginv(a), a))});
      for (double rho : {0.5, 1.0, 2.0, 10.0}) {
        const GroupElement lhs = gmul(dilate(rho, a), dilate(rho, b));
        const GroupElement rhs = dilate(rho, gmul(a, b));
        automorphism = std::max(automorphism, max_abs_difference(lhs, rhs) / (rho * rho));
      }
    }
    add(at_most("group.associativity", assoc, 1e-10));
    add(at_most("group.inverse_laws", inverse, 1e-12));
    add(at_most("group.dilation_automorphism", automorphism, 1e-12));

    const auto haar = haar_scaling_check(2.0, static_cast<int>(n), 10 * config_.samples, seed(3));
    add(within("group.haar_scaling_ratio", haar.empirical_ratio / haar.exact_ratio, 0.99, 1.01));

    // Side scalings: 4n coordinates by rho, 3 by rho^2.
    double exponent_error = 0.0;
    for (int m : {1, 2, 3}) {
      const double from_sides = 4.0 * m * 1.0 + 3.0 * 2.0;
      const double from_ratio = std::log(haar_scaling_check(2.0, m, 1, 0).exact_ratio) / std::log(2.0);
      exponent_error = std::max({exponent_error, std::fabs(from_sides - homogeneous_dimension(m)),
                                 std::fabs(from_ratio - homogeneous_dimension(m))});
    }
    add(at_most("group.haar_exponent", exponent_error, 0.0));
  }

  void norm_checks() {
    Sampler s(seed(4));
    const std::size_t n = config_.n;
    const std::vector<NormSpec> all = {NormSpec::koranyi(),          NormSpec::folland_stein(),
                                       NormSpec::alpha_family(1.0),  NormSpec::alpha_family(2.0),
                                       NormSpec::alpha_family(3.0),  NormSpec::alpha_family(4.0),
                                       NormSpec::alpha_family(6.0),  NormSpec::max(),
                                       NormSpec::box()};

    double symmetry = 0.0;
    std::uint64_t positivity_failures = 0;
    const GroupElement e = GroupElement::identity(n);
    for (const auto& spec : all) {
      if (eval(spec, e) != 0.0) ++positivity_failures;
    }
    const std::uint64_t points = std::min<std::uint64_t>(config_.samples, 100000);
    for (std::uint64_t i = 0; i < points; ++i) {
      const GroupElement v = random_scaled(s, n);
      for (const auto& spec : all) {
        const double a = eval(spec, v);
        if (!(a > 0.0)) ++positivity_failures;
        symmetry = std::max(symmetry, std::fabs(eval(spec, ginv(v)) - a) / a);
      }
    }
    add(at_most("norms.symmetry", symmetry, 1e-12));
    add(at_most("norms.positivity", static_cast<double>(positivity_failures), 0.0));

    // Degree-1 homogeneity over rho in 10^-3 .. 10^3.
    std::vector<double> rhos;
    for (int k = -6; k <= 6; ++k) rhos.push_back(std::pow(10.0, 0.5 * k));
    const std::uint64_t homogeneity_points = std::min<std::uint64_t>(config_.samples, 2000);
    double worst = 0.0;
    double box_worst = 0.0;
    GroupElement worst_point = e;
    for (std::uint64_t i = 0; i < homogeneity_points; ++i) {
      const GroupElement v = s.gaussian_element(n);
      for (double rho : rhos) {
        for (const auto& spec : all) {
          const double rel = std::fabs(homogeneity_defect(spec, v, rho)) / (rho * eval(spec, v));
          if (spec.homogeneous()) {
            if (rel > worst) {
              worst = rel;
              worst_point = v;
            }
          } else {
            box_worst = std::max(box_worst, rel);
          }
        }
      }
    }
    add(at_most("norms.homogeneity", worst, 1e-12, worst_point));

    GroupElement central = e;
    central.t = {1.0, 0.0, 0.0};
    const double defect = homogeneity_defect(NormSpec::box(), central, 2.0);
    add(at_most("norms.box_defect_center", std::fabs(defect - 2.0), 1e-12, central));
    add(at_least("norms.box_nonhomogeneous", std::fabs(defect), 0.5, central));
    add(expected_failure(at_most("norms.box_homogeneity", box_worst, 1e-12)));

    const double bound = koranyi_quasi_triangle_bound();
    for (const auto& spec : {NormSpec::koranyi(), NormSpec::folland_stein(),
                             NormSpec::alpha_family(4.0), NormSpec::max()}) {
      Sampler pairs(seed(5));
      double sup = 0.0;
      GroupElement witness = e;
      for (std::uint64_t i = 0; i < config_.samples; ++i) {
        const GroupElement a = random_scaled(pairs, n);
        const GroupElement b = random_scaled(pairs, n);
        const double r = quasi_triangle_ratio(spec, a, b);
        if (r > sup) {
          sup = r;
          witness = a;
        }
      }
      add(at_most("norms.quasi_triangle_sup." + spec.name(), sup, bound, witness));
    }

    double alpha4 = 0.0;
    for (std::uint64_t i = 0; i < config_.samples; ++i) {
      const GroupElement v = random_scaled(s, n);
      const double k = koranyi(v);
      alpha4 = std::max(alpha4, std::fabs(alpha_norm(4.0, v) - k) / k);
    }
    add(at_most("norms.alpha4_equals_koranyi", alpha4, 1e-14));
  }

  void equivalence_checks() {
    const std::size_t n = config_.n;
    const auto max_k =
        estimate_constants(NormSpec::max(), NormSpec::koranyi(), config_.samples, seed(6), true, n);
    const double quarter = std::pow(2.0, 0.25);
    VerifyCheck lower = within("equivalence.max_koranyi.lower_m", max_k.lower_m, 1.0, 1.001);
    lower.witness = max_k.argmin;
    add(std::move(lower));
    VerifyCheck upper = within("equivalence.max_koranyi.upper_M", max_k.upper_M, 1.18802, 1.18921);
    upper.witness = max_k.argmax;
    add(std::move(upper));
    const auto sandwich = verify_sandwich(max_k, config_.samples, seed(7));
    add(at_most("equivalence.max_koranyi.violations", static_cast<double>(sandwich.violations), 0));
    add(at_most("equivalence.max_koranyi.upper_gap", std::fabs(max_k.upper_M - quarter),
                1e-3 * quarter));

    const std::vector<NormSpec> family = {NormSpec::koranyi(), NormSpec::folland_stein(),
                                          NormSpec::alpha_family(2.0), NormSpec::max()};
    const std::uint64_t fresh = std::max<std::uint64_t>(config_.samples / 10, 1);
    std::uint64_t violations = 0;
    double duality = 0.0;
    std::uint64_t scale_mismatches = 0;
    std::vector<std::vector<EquivEstimate>> table(family.size());
    for (std::size_t a = 0; a < family.size(); ++a) {
      for (std::size_t b = 0; b < family.size(); ++b) {
        table[a].push_back(
            estimate_constants(family[a], family[b], config_.samples, seed(8), true, n));
      }
    }
    for (std::size_t a = 0; a < family.size(); ++a) {
      for (std::size_t b = 0; b < family.size(); ++b) {
        const auto& est = table[a][b];
        const auto check = verify_sandwich(est, fresh, seed(9));
        violations += check.violations;
        duality = std::max({duality, std::fabs(est.lower_m * table[b][a].upper_M - 1.0),
                            std::fabs(est.upper_M * table[b][a].lower_m - 1.0)});

        Sampler pts(seed(10));
        std::vector<GroupElement> base;
        for (int i = 0; i < 1000; ++i) base.push_back(pts.gaussian_element(n));
        const auto reference = verify_sandwich(est, base).violations;
        for (double rho : {0.01, 100.0}) {
          std::vector<GroupElement> scaled;
          for (const auto& v : base) scaled.push_back(dilate(rho, v));
          if (verify_sandwich(est, scaled).violations != reference) ++scale_mismatches;
        }
      }
    }
    add(at_most("equivalence.pairwise_violations", static_cast<double>(violations), 0.0));
    add(at_most("equivalence.duality", duality, 0.01));
    add(at_most("equivalence.scale_independence", static_cast<double>(scale_mismatches), 0.0));

    double monotone_breaks = 0.0;
    double prev_m = std::numeric_limits<double>::infinity();
    double prev_M = 0.0;
    for (std::uint64_t count = 10; count <= std::max<std::uint64_t>(config_.samples, 10);
         count *= 10) {
      const auto est =
          estimate_constants(NormSpec::koranyi(), NormSpec::folland_stein(), count, seed(11), false, n);
      if (est.lower_m > prev_m || est.upper_M < prev_M) monotone_breaks += 1.0;
      prev_m = est.lower_m;
      prev_M = est.upper_M;
    }
    add(at_most("equivalence.monotone_in_samples", monotone_breaks, 0.0));
  }

  void cc_checks() {
    const std::size_t n = config_.n;
    CCOptions options;
    options.seed = seed(12);

    GroupElement segment = GroupElement::identity(n);
    segment.u[0] = Quaternion::real(1.0);
    const CCResult straight = cc_distance(segment, options);
    add(within("cc.horizontal_segment_distance", straight.distance, 0.99, 1.03));
    add(at_most("cc.horizontal_segment_endpoint", straight.endpoint_error, 1e-6));

    Sampler s(seed(13));
    std::vector<GroupElement> suite;
    for (std::size_t i = 0; i < config_.cc_targets; ++i) {
      suite.push_back(project_to_sphere(NormSpec::koranyi(), s.sphere_direction(n)));
    }

    double lower_bound_gap = INFINITY;
    double covariance = 0.0;
    double refinement = 0.0;
    double inverse_gap = 0.0;
    double triangle_gap = -INFINITY;
    std::uint64_t unconverged = 0;
    std::vector<double> base(suite.size());
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const CCResult r = cc_distance(suite[i], options);
      base[i] = r.distance;
      if (!r.converged) ++unconverged;
      lower_bound_gap =
          std::min(lower_bound_gap, r.distance - std::sqrt(norm2(suite[i].u)) + options.tol);

      for (double rho : {0.5, 2.0}) {
        const CCResult scaled = cc_distance(dilate(rho, suite[i]), options);
        covariance = std::max(covariance, std::fabs(scaled.distance / (rho * r.distance) - 1.0));
      }
      CCOptions fine = options;
      fine.steps = 2 * options.steps;
      refinement =
          std::max(refinement, cc_distance(suite[i], fine).distance / r.distance - 1.0);
      inverse_gap =
          std::max(inverse_gap, std::fabs(cc_distance(ginv(suite[i]), options).distance - r.distance));
    }
    for (std::size_t i = 0; i + 1 < suite.size(); i += 2) {
      const double ab = cc_distance(gmul(suite[i], suite[i + 1]), options).distance;
      triangle_gap = std::max(triangle_gap, ab - base[i] - base[i + 1]);
    }

    add(at_most("cc.converged_targets_missing", static_cast<double>(unconverged), 0.0));
    add(at_least("cc.horizontal_projection_bound", lower_bound_gap, 0.0));
    add(at_most("cc.dilation_covariance", covariance, 0.02));
    add(at_most("cc.refinement_monotonicity", refinement, 0.01));
    add(at_most("cc.inverse_symmetry", inverse_gap, 2 * options.tol));
    if (suite.size() >= 2) add(at_most("cc.triangle_spot_check", triangle_gap, 3 * options.tol));

    const auto gauge = compare_to_gauge(config_.cc_targets, seed(14), options, n);
    add(at_least("cc.gauge_min_ratio", gauge.min_ratio, 1e-9));
    add(at_most("cc.gauge_ratio_spread", gauge.max_ratio / gauge.min_ratio, 10.0));
  }

  void operator_checks() {
    std::uint64_t table_failures = 0;
    for (const auto& r : check_commutation_table()) table_failures += r.pass ? 0 : 1;
    add(at_most("ops.commutation_table", static_cast<double>(table_failures), 0.0));

    std::uint64_t jacobi_failures = 0;
    for (const auto& r : check_jacobi()) jacobi_failures += r.pass ? 0 : 1;
    add(at_most("ops.jacobi", static_cast<double>(jacobi_failures), 0.0));

    std::uint64_t step_failures = 0;
    for (const auto& r : check_step_two()) step_failures += r.pass ? 0 : 1;
    add(at_most("ops.step_two_nilpotent", static_cast<double>(step_failures), 0.0));

    // Derivation property on random sparse polynomials of degree <= 3.
    Sampler s(seed(15));
    auto random_poly = [&s] {
      Polynomial p;
      for (int term = 0; term < 4; ++term) {
        Polynomial::Exponent e{};
        int budget = static_cast<int>(s.uniform() * 4.0);
        while (budget-- > 0) ++e[static_cast<int>(s.uniform() * kNumVars)];
        p += Polynomial::monomial(e, Rational(static_cast<int>(s.uniform() * 11.0) - 5, 1 + static_cast<int>(s.uniform() * 3.0)));
      }
      return p;
    };
    const Frame frame = standard_frame();
    std::uint64_t derivation_failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const Polynomial f = random_poly();
      const Polynomial g = random_poly();
      for (const auto& field : frame) {
        if (field.apply(f * g) != field.apply(f) * g + f * field.apply(g)) ++derivation_failures;
      }
    }
    add(at_most("ops.derivation_property", static_cast<double>(derivation_failures), 0.0));

    // d/ds f(p exp(s X0)) at s = 0 against apply(X0, f)(p), central differences.
    const Polynomial f = Polynomial::variable(Var::x1) * Polynomial::variable(Var::t1) +
                         Polynomial::variable(Var::x0) * Polynomial::variable(Var::t3) +
                         Polynomial::variable(Var::t2);
    const Polynomial x0f = frame[0].apply(f);
    double flow_error = 0.0;
    const double h = 1e-4;
    for (int trial = 0; trial < 20; ++trial) {
      const GroupElement p = s.gaussian_element(1);
      auto value_along = [&](double step) {
        HorizontalPath path(1, 1);
        path.control(0)[0] = step;
        const auto q = to_coordinates(gmul(p, develop(path)));
        return f.evaluate(std::span<const double, kNumVars>(q.data(), kNumVars));
      };
      const double fd = (value_along(h) - value_along(-h)) / (2.0 * h);
      const auto pc = to_coordinates(p);
      const double exact = x0f.evaluate(std::span<const double, kNumVars>(pc.data(), kNumVars));
      flow_error = std::max(flow_error, std::fabs(fd - exact));
    }
    add(at_most("ops.x0_flow_consistency", flow_error, 1e-6));

    const SecondOrderOperator squares = sum_of_squares();
    const Polynomial radius2 = Polynomial::variable(Var::x0) * Polynomial::variable(Var::x0) +
                               Polynomial::variable(Var::x1) * Polynomial::variable(Var::x1) +
                               Polynomial::variable(Var::x2) * Polynomial::variable(Var::x2) +
                               Polynomial::variable(Var::x3) * Polynomial::variable(Var::x3);
    std::uint64_t block_failures = 0;
    for (Var t : {Var::t1, Var::t2, Var::t3}) {
      if (squares.mixed_coefficient(t, t) != Rational(4) * radius2) ++block_failures;
    }
    add(at_most("ops.center_block_4r2", static_cast<double>(block_failures), 0.0));
  }

  VerifyConfig config_;
  VerifyReport report_;
};

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.samples == 0) throw std::invalid_argument("verify: samples must be positive");
  if (config.n == 0) throw std::invalid_argument("verify: n must be at least 1");
  static const std::vector<std::string> kModules = {"quaternion", "group", "norms",
                                                    "equivalence", "cc", "ops"};
  for (const auto& m : config.modules) {
    if (std::find(kModules.begin(), kModules.end(), m) == kModules.end()) {
      throw std::invalid_argument("verify: unknown module '" + m + "'");
    }
  }
  return Suite(config).run();
}

}  // namespace hq
