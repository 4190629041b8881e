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

// hq: command-line front end for the quaternionic Heisenberg group library.
//
// Exit status: 0 success, 1 a check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <glog/logging.h>

#include "CLI11.hpp"

#include "hq/cc_metric.hpp"
#include "hq/equivalence.hpp"
#include "hq/errors.hpp"
#include "hq/io.hpp"
#include "hq/norms.hpp"
#include "hq/operators.hpp"
#include "hq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HQ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("HQ_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 0;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

hq::TableFormat table_format(const std::string& format) {
  if (format == "csv") return hq::TableFormat::Csv;
  if (format == "json") return hq::TableFormat::Json;
  throw UsageError("format must be csv or json here, got '" + format + "'");
}

void require_n(const hq::GroupElement& g, std::size_t n) {
  if (n != 0 && g.n() != n) {
    throw UsageError("point has n=" + std::to_string(g.n()) + " but --n " + std::to_string(n));
  }
}

// --- norm ---------------------------------------------------------------

struct NormArgs {
  std::string family;
  std::string point;
  std::string batch;
  std::size_t n = 0;
};

int run_norm(const NormArgs& args) {
  const hq::NormSpec spec = hq::NormSpec::parse(args.family);
  if (!args.point.empty() == !args.batch.empty()) {
    throw UsageError("norm: give exactly one of --point or --batch");
  }
  if (!args.point.empty()) {
    const hq::GroupElement g = hq::parse_point(args.point);
    require_n(g, args.n);
    std::cout << hq::format_number(hq::eval(spec, g)) << '\n';
    return kExitOk;
  }
  std::istringstream lines(read_file(args.batch));
  std::vector<hq::Json> rows;
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const hq::GroupElement g = hq::parse_point(line);
    require_n(g, args.n);
    rows.push_back(hq::Json{{"point", line}, {"family", spec.name()}, {"value", hq::eval(spec, g)}});
  }
  std::cout << hq::emit_table(rows, hq::TableFormat::Csv, {"point", "family", "value"});
  return kExitOk;
}

// --- equiv ----------------------------------------------------------------

struct EquivArgs {
  std::string from;
  std::string to;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  bool refine = false;
  std::size_t n = 1;
  std::string format = "json";
  std::string output;
};

int run_equiv(const EquivArgs& args) {
  if (args.from.empty() || args.to.empty()) throw UsageError("equiv: --from and --to are required");
  if (args.samples == 0) throw UsageError("equiv: --samples must be positive");
  if (args.n == 0) throw UsageError("equiv: --n must be at least 1");
  const auto from = hq::NormSpec::parse(args.from);
  const auto to = hq::NormSpec::parse(args.to);
  if (!from.homogeneous() || !to.homogeneous()) {
    throw UsageError("equiv: the box norm is not homogeneous; no sphere-based estimate exists");
  }
  const auto est = hq::estimate_constants(from, to, args.samples, args.seed, args.refine, args.n);
  const hq::Json record = hq::to_json(est);
  if (args.format == "json") {
    write_output(hq::dump(record) + "\n", args.output);
  } else {
    write_output(hq::emit_table(std::span(&record, 1), table_format(args.format)), args.output);
  }
  return kExitOk;
}

struct EquivVerifyArgs {
  std::string estimate;
  std::uint64_t fresh = 100000;
  std::uint64_t seed = 0;
};

int run_equiv_verify(const EquivVerifyArgs& args) {
  if (args.estimate.empty()) throw UsageError("equiv verify: --estimate is required");
  hq::Json j;
  try {
    j = hq::Json::parse(read_file(args.estimate));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("equiv verify: estimate is not valid JSON: ") + e.what());
  }
  const auto est = hq::estimate_from_json(j);
  const auto check = hq::verify_sandwich(est, args.fresh, args.seed);
  hq::Json out = hq::to_json(check);
  out["from"] = est.from.name();
  out["to"] = est.to.name();
  out["lower_m"] = est.lower_m;
  out["upper_M"] = est.upper_M;
  out["tolerance"] = hq::kSandwichTolerance;
  std::cout << hq::dump(out) << '\n';
  return check.violations == 0 ? kExitOk : kExitCheckFailed;
}

// --- ccdist -----------------------------------------------------------------

struct CCArgs {
  std::string target;
  std::string from;
  hq::CCOptions options;
  std::string dump_path;
};

void dump_path_csv(const hq::CCResult& result, const std::string& file) {
  const auto& path = result.path;
  const auto knots = hq::develop_knots(path);
  std::ostringstream os;
  os << 's';
  for (std::size_t k = 0; k < path.width(); ++k) os << ",a" << k;
  for (std::size_t k = 0; k < path.width(); ++k) os << ",x" << k;
  os << ",t1,t2,t3\n";
  for (std::size_t i = 0; i < knots.size(); ++i) {
    os << hq::format_number(static_cast<double>(i) * path.ds());
    for (std::size_t k = 0; k < path.width(); ++k) {
      os << ',';
      if (i < path.steps()) os << hq::format_number(path.control(i)[k]);
    }
    for (double c : hq::to_coordinates(knots[i])) os << ',' << hq::format_number(c);
    os << '\n';
  }
  write_output(os.str(), file);
}

int run_ccdist(const CCArgs& args) {
  if (args.target.empty()) throw UsageError("ccdist: --target is required");
  if (args.options.steps < 4) throw UsageError("ccdist: --steps must be at least 4");
  if (!(args.options.tol > 0.0)) throw UsageError("ccdist: --tol must be positive");
  const hq::GroupElement target = hq::parse_point(args.target);
  hq::CCResult result;
  if (args.from.empty()) {
    result = hq::cc_distance(target, args.options);
  } else {
    const hq::GroupElement from = hq::parse_point(args.from);
    if (from.n() != target.n()) throw UsageError("ccdist: --from and --target differ in n");
    result = hq::cc_distance_between(from, target, args.options);
  }
  std::cout << hq::dump(hq::to_json(result, /*include_path=*/true)) << '\n';
  if (!args.dump_path.empty()) dump_path_csv(result, args.dump_path);
  return kExitOk;
}

// --- ops ------------------------------------------------------------------

int run_ops_table(std::size_t n) {
  if (n != 1) throw UsageError("ops: the symbolic operator algebra is implemented for n = 1 only");
  bool ok = true;
  auto print = [&](const std::vector<hq::RelationCheck>& checks) {
    for (const auto& c : checks) {
      ok = ok && c.pass;
      std::cout << (c.pass ? "ok    " : "FAIL  ") << c.relation << "    computed: "
                << c.actual.to_string() << '\n';
    }
  };
  std::cout << "# commutation table\n";
  print(hq::check_commutation_table());
  std::cout << "# Jacobi identity\n";
  print(hq::check_jacobi());
  std::cout << "# step-two nilpotency\n";
  print(hq::check_step_two());
  return ok ? kExitOk : kExitCheckFailed;
}

int run_ops_expand(const std::string& op, std::size_t n) {
  if (n != 1) throw UsageError("ops: the symbolic operator algebra is implemented for n = 1 only");
  if (op == "sublaplacian") {
    std::cout << hq::sublaplacian().expansion();
  } else if (op == "sum-of-squares") {
    std::cout << hq::sum_of_squares().expansion();
  } else if (op == "quoted-laplacian-diff") {
    const auto diff = hq::quoted_laplacian_discrepancy();
    std::cout << "# -(X0^2+X1^2+X2^2+X3^2) minus the quoted closed form\n";
    std::cout << (diff.is_zero() ? "(no difference)\n" : diff.expansion());
  } else {
    const hq::FirstOrderOperator field = hq::vector_field(op);
    std::cout << op << " = " << field.to_string() << '\n';
  }
  return kExitOk;
}

// --- haar -------------------------------------------------------------------

struct HaarArgs {
  double rho = 2.0;
  int n = 1;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
};

int run_haar(const HaarArgs& args) {
  if (!(args.rho > 0.0)) throw UsageError("haar: --rho must be positive");
  if (args.n < 1) throw UsageError("haar: --n must be at least 1");
  if (args.samples == 0) throw UsageError("haar: --samples must be positive");
  const auto r = hq::haar_scaling_check(args.rho, args.n, args.samples, args.seed);
  const hq::Json out{{"rho", args.rho},
                     {"n", args.n},
                     {"exponent", hq::homogeneous_dimension(args.n)},
                     {"empirical_ratio", r.empirical_ratio},
                     {"exact_ratio", r.exact_ratio},
                     {"relative_error", r.empirical_ratio / r.exact_ratio - 1.0},
                     {"samples", args.samples},
                     {"seed", args.seed}};
  std::cout << hq::dump(out) << '\n';
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

int run_verify(hq::VerifyConfig config, const std::string& format) {
  if (config.samples == 0) throw UsageError("verify: --samples must be positive");
  if (config.n == 0) throw UsageError("verify: --n must be at least 1");
  if (format != "json" && format != "text") throw UsageError("verify: --format is json or text");
  hq::VerifyReport report;
  try {
    report = hq::run_verify(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << (format == "json" ? hq::dump(report.to_json()) + "\n" : report.to_text());
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  // Solver log output at ERROR and above only.
  FLAGS_minloglevel = google::GLOG_ERROR;
  google::InitGoogleLogging(argv[0]);

  CLI::App app{"Quaternionic Heisenberg group: norms, equivalence constants, CC distance"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "hq: " << e.what() << '\n';
    return kExitUsage;
  }

  NormArgs norm_args;
  auto* norm = app.add_subcommand("norm", "Evaluate a quasi-norm");
  norm->add_option("--family", norm_args.family, "koranyi|fs|alpha:<a>|box|max")->required();
  norm->add_option("--point", norm_args.point, "Point literal 'w+xi+yj+zk;...;t1,t2,t3'");
  norm->add_option("--batch", norm_args.batch, "File with one point per line ('-' for stdin)");
  norm->add_option("--n", norm_args.n, "Expected quaternionic dimension");

  EquivArgs equiv_args;
  equiv_args.seed = seed;
  auto* equiv = app.add_subcommand("equiv", "Estimate sandwich constants between two quasi-norms");
  equiv->add_option("--from", equiv_args.from, "Norm whose unit sphere is searched");
  equiv->add_option("--to", equiv_args.to, "Norm extremized on that sphere");
  equiv->add_option("--samples", equiv_args.samples, "Sphere samples")->capture_default_str();
  equiv->add_option("--seed", equiv_args.seed, "RNG seed (default $HQ_SEED or 0)");
  equiv->add_flag("--refine", equiv_args.refine, "Polish witnesses by local search");
  equiv->add_option("--n", equiv_args.n, "Quaternionic dimension")->capture_default_str();
  equiv->add_option("--format", equiv_args.format, "json|csv")->capture_default_str();
  equiv->add_option("--output", equiv_args.output, "Write to file instead of stdout");

  EquivVerifyArgs verify_args;
  verify_args.seed = seed;
  auto* equiv_verify = equiv->add_subcommand("verify", "Check an estimate on fresh points");
  equiv_verify->add_option("--estimate", verify_args.estimate, "Estimate JSON file")->required();
  equiv_verify->add_option("--fresh", verify_args.fresh, "Fresh points")->capture_default_str();
  equiv_verify->add_option("--seed", verify_args.seed, "RNG seed (default $HQ_SEED or 0)");
  equiv->require_subcommand(0, 1);

  CCArgs cc_args;
  cc_args.options.seed = seed;
  auto* cc = app.add_subcommand("ccdist", "Carnot-Caratheodory distance by path optimization");
  cc->add_option("--target", cc_args.target, "Target point literal")->required();
  cc->add_option("--from", cc_args.from, "Start point (default identity)");
  cc->add_option("--steps", cc_args.options.steps, "Control segments")->capture_default_str();
  cc->add_option("--restarts", cc_args.options.restarts, "Multi-start count")->capture_default_str();
  cc->add_option("--seed", cc_args.options.seed, "RNG seed (default $HQ_SEED or 0)");
  cc->add_option("--tol", cc_args.options.tol, "Endpoint tolerance")->capture_default_str();
  cc->add_option("--dump-path", cc_args.dump_path, "Write s, controls, gamma(s) rows as CSV");

  std::size_t ops_n = 1;
  std::string ops_op;
  auto* ops = app.add_subcommand("ops", "Exact left-invariant vector field algebra (n = 1)");
  ops->add_option("--n", ops_n, "Must be 1")->capture_default_str();
  auto* ops_table = ops->add_subcommand("table", "Print the verified commutation table");
  auto* ops_expand = ops->add_subcommand("expand", "Print a canonical operator expansion");
  ops_expand
      ->add_option("--op", ops_op,
                   "sublaplacian|sum-of-squares|quoted-laplacian-diff|X0..X3|T1..T3")
      ->required();
  ops->require_subcommand(1);

  HaarArgs haar_args;
  haar_args.seed = seed;
  auto* haar = app.add_subcommand("haar", "Monte Carlo check of Haar-measure scaling");
  haar->add_option("--rho", haar_args.rho, "Dilation factor")->capture_default_str();
  haar->add_option("--n", haar_args.n, "Quaternionic dimension")->capture_default_str();
  haar->add_option("--samples", haar_args.samples, "Samples")->capture_default_str();
  haar->add_option("--seed", haar_args.seed, "RNG seed (default $HQ_SEED or 0)");

  hq::VerifyConfig verify_config;
  verify_config.seed = seed;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run the full property suite");
  verify->add_option("--samples", verify_config.samples, "Samples per property")
      ->capture_default_str();
  verify->add_option("--seed", verify_config.seed, "RNG seed (default $HQ_SEED or 0)");
  verify->add_option("--n", verify_config.n, "Quaternionic dimension")->capture_default_str();
  verify->add_option("--cc-targets", verify_config.cc_targets, "Targets per CC suite")
      ->capture_default_str();
  verify->add_option("--module", verify_config.modules,
                     "Restrict to quaternion|group|norms|equivalence|cc|ops (repeatable)");
  verify->add_option("--format", verify_format, "json|text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*norm) return run_norm(norm_args);
    if (*equiv) {
      if (*equiv_verify) return run_equiv_verify(verify_args);
      return run_equiv(equiv_args);
    }
    if (*cc) return run_ccdist(cc_args);
    if (*ops) {
      if (*ops_table) return run_ops_table(ops_n);
      if (*ops_expand) return run_ops_expand(ops_op, ops_n);
    }
    if (*haar) return run_haar(haar_args);
    if (*verify) return run_verify(verify_config, verify_format);
  } catch (const UsageError& e) {
    std::cerr << "hq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hq::ParseError& e) {
    std::cerr << "hq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "hq: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
