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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hq/cc_metric.hpp"
#include "hq/equivalence.hpp"
#include "hq/group.hpp"
#include "hq/io.hpp"
#include "hq/norms.hpp"
#include "hq/operators.hpp"
#include "hq/sampling.hpp"
#include "hq/verify.hpp"

namespace {

using namespace hq;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome max_koranyi_sandwich() {
  const auto start = Clock::now();
  const EquivEstimate est =
      estimate_constants(NormSpec::max(), NormSpec::koranyi(), 1000000, 0, true);
  const SandwichCheck check = verify_sandwich(est, 100000, 1);
  const double elapsed = seconds_since(start);
  const bool pass = est.lower_m >= 1.0 && est.lower_m <= 1.001 && est.upper_M >= 1.18802 &&
                    est.upper_M <= 1.18921 && check.violations == 0 && elapsed <= 60.0;
  return {pass, fmt("lower_m=%s upper_M=%s violations=%llu runtime=%.2fs",
                    format_number(est.lower_m).c_str(), format_number(est.upper_M).c_str(),
                    static_cast<unsigned long long>(check.violations), elapsed)};
}

Outcome alpha_four_is_koranyi() {
  Sampler s(0);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const GroupElement v = s.gaussian_element(1);
    const double k = koranyi(v);
    worst = std::max(worst, std::abs(alpha_norm(4.0, v) - k) / k);
  }
  return {worst <= 1e-14, fmt("max relative difference=%.3e over 1e5 points", worst)};
}

Outcome box_non_homogeneity() {
  const GroupElement center{{Quaternion{}}, {1.0, 0.0, 0.0}};
  const double box = homogeneity_defect(NormSpec::box(), center, 2.0);
  double worst = 0.0;
  Sampler s(0);
  for (const auto& spec : {NormSpec::koranyi(), NormSpec::folland_stein(),
                           NormSpec::alpha_family(1), NormSpec::alpha_family(2),
                           NormSpec::alpha_family(3), NormSpec::alpha_family(4),
                           NormSpec::alpha_family(6), NormSpec::max()}) {
    for (int e = 0; e <= 12; ++e) {
      const double rho = std::pow(10.0, -3.0 + 0.5 * e);
      for (int i = 0; i < 200; ++i) {
        const GroupElement v = s.gaussian_element(1);
        worst = std::max(worst, std::abs(homogeneity_defect(spec, v, rho)) / (rho * eval(spec, v)));
      }
    }
  }
  const bool pass = std::abs(box - 2.0) <= 1e-12 && worst <= 1e-12;
  return {pass, fmt("box defect=%s homogeneous worst relative defect=%.3e",
                    format_number(box).c_str(), worst)};
}

Outcome commutation_table() {
  const auto start = Clock::now();
  std::size_t stated = 0, failed = 0, total = 0;
  for (const auto& c : check_commutation_table()) {
    ++total;
    if (c.relation.find("= 4T") != std::string::npos) ++stated;
    if (!c.pass) ++failed;
  }
  for (const auto& c : check_jacobi()) {
    ++total;
    if (!c.pass) ++failed;
  }
  for (const auto& c : check_step_two()) {
    ++total;
    if (!c.pass) ++failed;
  }
  const double elapsed = seconds_since(start);
  return {stated == 6 && failed == 0 && elapsed <= 1.0,
          fmt("stated relations=%zu checks=%zu failed=%zu runtime=%.3fs", stated, total, failed,
              elapsed)};
}

// Product of per-coordinate scale factors of dilate(2, .) read off unit
// vectors, as a power of two.
int dilation_exponent(int n) {
  const std::size_t dim = coordinate_dimension(static_cast<std::size_t>(n));
  double log2_det = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<double> e(dim, 0.0);
    e[c] = 1.0;
    log2_det += std::log2(to_coordinates(dilate(2.0, from_coordinates(e)))[c]);
  }
  return static_cast<int>(std::lround(log2_det));
}

Outcome haar_scaling() {
  const HaarScaling h = haar_scaling_check(2.0, 1, 1000000, 0);
  const double ratio = h.empirical_ratio / h.exact_ratio;
  bool exponents = h.exact_ratio == 1024.0;
  for (int n : {1, 2, 3}) {
    exponents = exponents && dilation_exponent(n) == 4 * n + 6 &&
                homogeneous_dimension(n) == 4 * n + 6 &&
                haar_scaling_check(2.0, n, 1, 0).exact_ratio == std::ldexp(1.0, 4 * n + 6);
  }
  return {ratio >= 0.99 && ratio <= 1.01 && exponents,
          fmt("empirical/exact=%.6f exact=%s exponents %s", ratio,
              format_number(h.exact_ratio).c_str(), exponents ? "match 4n+6" : "MISMATCH")};
}

Outcome quasi_triangle() {
  VerifyConfig config;
  config.samples = 1000000;
  config.modules = {"norms"};
  const VerifyReport report = run_verify(config);
  const VerifyCheck* c = report.find("norms.quasi_triangle_sup.koranyi");
  if (c == nullptr) return {false, "norms.quasi_triangle_sup.koranyi missing from verify report"};
  const double bound = std::pow(24.0, 0.25);
  return {c->status == CheckStatus::Pass && c->measured <= bound,
          fmt("koranyi sup over 1e6 pairs=%s bound=%s (reported by verify)",
              format_number(c->measured).c_str(), format_number(bound).c_str())};
}

Outcome cc_sanity() {
  const auto start = Clock::now();
  CCOptions options;
  options.steps = 32;
  options.restarts = 8;
  const CCResult seg = cc_distance(GroupElement{{Quaternion::real(1.0)}, {0.0, 0.0, 0.0}}, options);
  bool pass = seg.distance >= 0.99 && seg.distance <= 1.03 && seg.endpoint_error <= 1e-6;
  std::string detail = fmt("segment d=%.9f err=%.2e;", seg.distance, seg.endpoint_error);

  std::vector<double> mins, maxs;
  for (std::uint64_t seed : {0, 1, 2}) {
    const GaugeComparison g = compare_to_gauge(100, seed, options);
    pass = pass && g.min_ratio > 0.0 && g.max_ratio / g.min_ratio < 10.0;
    mins.push_back(g.min_ratio);
    maxs.push_back(g.max_ratio);
    detail += fmt(" seed %llu [%.4f, %.4f] excluded=%zu;", static_cast<unsigned long long>(seed),
                  g.min_ratio, g.max_ratio, g.excluded);
  }
  const auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return (*hi - *lo) / *lo;
  };
  const double min_spread = spread(mins), max_spread = spread(maxs);
  const double elapsed = seconds_since(start);
  pass = pass && min_spread <= 0.05 && max_spread <= 0.05 && elapsed <= 600.0;
  detail += fmt(" seed spread min=%.2f%% max=%.2f%% runtime=%.1fs", 100 * min_spread,
                100 * max_spread, elapsed);
  return {pass, detail};
}

Outcome pairwise_equivalence() {
  const std::vector<NormSpec> specs = {NormSpec::koranyi(), NormSpec::folland_stein(),
                                       NormSpec::alpha_family(2), NormSpec::max()};
  std::uint64_t violations = 0;
  int pairs = 0;
  for (const auto& from : specs) {
    for (const auto& to : specs) {
      const EquivEstimate est = estimate_constants(from, to, 100000, 0, false);
      violations += verify_sandwich(est, 10000, 1).violations;
      ++pairs;
    }
  }
  return {violations == 0,
          fmt("ordered pairs=%d total violations=%llu at tolerance %.0e", pairs,
              static_cast<unsigned long long>(violations), kSandwichTolerance)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 max/koranyi sandwich constants", max_koranyi_sandwich},
      {"AC2 alpha(4) equals koranyi", alpha_four_is_koranyi},
      {"AC3 box non-homogeneity", box_non_homogeneity},
      {"AC4 exact commutation table", commutation_table},
      {"AC5 haar scaling exponent", haar_scaling},
      {"AC6 koranyi quasi-triangle supremum", quasi_triangle},
      {"AC7 cc distance sanity", cc_sanity},
      {"AC8 pairwise quasi-norm equivalence", pairwise_equivalence},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %s  %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
