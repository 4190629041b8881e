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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "hq/cc_metric.hpp"
#include "hq/equivalence.hpp"
#include "hq/errors.hpp"
#include "hq/group.hpp"
#include "hq/io.hpp"
#include "hq/norms.hpp"
#include "hq/operators.hpp"
#include "hq/quaternion.hpp"
#include "hq/verify.hpp"

namespace py = pybind11;

namespace {

hq::Quaternion to_quaternion(const py::handle& h) {
  if (py::isinstance<hq::Quaternion>(h)) return h.cast<hq::Quaternion>();
  const auto c = h.cast<std::vector<double>>();
  if (c.size() != 4) throw hq::DimensionError("quaternion needs four components (w, x, y, z)");
  return {c[0], c[1], c[2], c[3]};
}

hq::GroupElement make_element(const py::sequence& u, const std::array<double, 3>& t) {
  hq::GroupElement g;
  for (const auto& item : u) g.u.push_back(to_quaternion(item));
  if (g.u.empty()) throw hq::DimensionError("group element needs n >= 1");
  g.t = t;
  return g;
}

py::object json_to_python(const hq::Json& j) {
  return py::module_::import("json").attr("loads")(hq::dump(j, -1));
}

std::string repr(const hq::GroupElement& g) { return "GroupElement('" + hq::format_point(g) + "')"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternionic Heisenberg group numerics";

  py::class_<hq::Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init([](double w, double x, double y, double z) {
             return hq::Quaternion{w, x, y, z};
           }),
           py::arg("w"), py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0)
      .def_readwrite("w", &hq::Quaternion::w)
      .def_readwrite("x", &hq::Quaternion::x)
      .def_readwrite("y", &hq::Quaternion::y)
      .def_readwrite("z", &hq::Quaternion::z)
      .def_static("parse", &hq::parse_quaternion)
      .def("conj", [](const hq::Quaternion& q) { return hq::qconj(q); })
      .def("im", [](const hq::Quaternion& q) { return hq::qim(q); })
      .def("norm", &hq::Quaternion::norm)
      .def("__mul__", [](const hq::Quaternion& a, const hq::Quaternion& b) { return a * b; })
      .def("__mul__", [](const hq::Quaternion& a, double s) { return a * s; })
      .def("__rmul__", [](const hq::Quaternion& a, double s) { return s * a; })
      .def("__add__", [](const hq::Quaternion& a, const hq::Quaternion& b) { return a + b; })
      .def("__sub__", [](const hq::Quaternion& a, const hq::Quaternion& b) { return a - b; })
      .def("__neg__", [](const hq::Quaternion& a) { return -a; })
      .def("__eq__", [](const hq::Quaternion& a, const hq::Quaternion& b) { return a == b; })
      .def("__iter__",
           [](const hq::Quaternion& q) {
             return py::iter(py::make_tuple(q.w, q.x, q.y, q.z));
           })
      .def("__repr__", [](const hq::Quaternion& q) {
        return "Quaternion('" + hq::format_quaternion(q) + "')";
      });

  m.def("dot_bar", [](const py::sequence& r, const py::sequence& u) {
    std::vector<hq::Quaternion> a, b;
    for (const auto& item : r) a.push_back(to_quaternion(item));
    for (const auto& item : u) b.push_back(to_quaternion(item));
    return hq::dot_bar(a, b);
  });

  py::class_<hq::GroupElement>(m, "GroupElement")
      .def(py::init(&make_element), py::arg("u"), py::arg("t") = std::array<double, 3>{})
      .def_static("identity", &hq::GroupElement::identity, py::arg("n") = 1)
      .def_static("parse", &hq::parse_point)
      .def_readwrite("u", &hq::GroupElement::u)
      .def_readwrite("t", &hq::GroupElement::t)
      .def_property_readonly("n", &hq::GroupElement::n)
      .def("is_identity", &hq::GroupElement::is_identity)
      .def("coordinates", &hq::to_coordinates)
      .def("__mul__", &hq::gmul)
      .def("__eq__", [](const hq::GroupElement& a, const hq::GroupElement& b) { return a == b; })
      .def("__repr__", &repr);

  m.def("gmul", &hq::gmul);
  m.def("ginv", &hq::ginv);
  m.def("dilate", &hq::dilate, py::arg("rho"), py::arg("g"));
  m.def("parse_point", &hq::parse_point);
  m.def("format_point", &hq::format_point);

  py::class_<hq::HaarScaling>(m, "HaarScaling")
      .def_readonly("empirical_ratio", &hq::HaarScaling::empirical_ratio)
      .def_readonly("exact_ratio", &hq::HaarScaling::exact_ratio);
  m.def("haar_scaling_check", &hq::haar_scaling_check, py::arg("rho"), py::arg("n") = 1,
        py::arg("samples") = 1000000, py::arg("seed") = 0);

  py::class_<hq::NormSpec>(m, "NormSpec")
      .def(py::init(&hq::NormSpec::parse), py::arg("name"))
      .def_property_readonly("name", &hq::NormSpec::name)
      .def_property_readonly("homogeneous", &hq::NormSpec::homogeneous)
      .def("__eq__", [](const hq::NormSpec& a, const hq::NormSpec& b) { return a == b; })
      .def("__repr__", [](const hq::NormSpec& s) { return "NormSpec('" + s.name() + "')"; });
  py::implicitly_convertible<py::str, hq::NormSpec>();

  m.def("norm", &hq::eval, py::arg("spec"), py::arg("g"));
  m.def("homogeneity_defect", &hq::homogeneity_defect, py::arg("spec"), py::arg("g"),
        py::arg("rho"));
  m.def("quasi_triangle_ratio", &hq::quasi_triangle_ratio, py::arg("spec"), py::arg("a"),
        py::arg("b"));
  m.def("koranyi_quasi_triangle_bound", &hq::koranyi_quasi_triangle_bound);

  py::class_<hq::EquivEstimate>(m, "EquivEstimate")
      .def_readonly("from_spec", &hq::EquivEstimate::from)
      .def_readonly("to_spec", &hq::EquivEstimate::to)
      .def_readonly("n", &hq::EquivEstimate::n)
      .def_readwrite("lower_m", &hq::EquivEstimate::lower_m)
      .def_readwrite("upper_M", &hq::EquivEstimate::upper_M)
      .def_readonly("argmin", &hq::EquivEstimate::argmin)
      .def_readonly("argmax", &hq::EquivEstimate::argmax)
      .def_readonly("samples", &hq::EquivEstimate::samples)
      .def_readonly("seed", &hq::EquivEstimate::seed)
      .def_readonly("refined", &hq::EquivEstimate::refined)
      .def("to_json", [](const hq::EquivEstimate& e) { return hq::dump(hq::to_json(e)); });

  py::class_<hq::SandwichCheck>(m, "SandwichCheck")
      .def_readonly("violations", &hq::SandwichCheck::violations)
      .def_readonly("max_excess", &hq::SandwichCheck::max_excess)
      .def_readonly("points", &hq::SandwichCheck::points);

  m.def("project_to_sphere", &hq::project_to_sphere, py::arg("spec"), py::arg("g"));
  m.def("estimate_constants", &hq::estimate_constants, py::arg("from_spec"), py::arg("to_spec"),
        py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("refine") = false,
        py::arg("n") = 1);
  m.def("verify_sandwich",
        py::overload_cast<const hq::EquivEstimate&, std::uint64_t, std::uint64_t>(
            &hq::verify_sandwich),
        py::arg("estimate"), py::arg("fresh") = 100000, py::arg("seed") = 0);

  py::class_<hq::CCResult>(m, "CCResult")
      .def_readonly("distance", &hq::CCResult::distance)
      .def_readonly("endpoint_error", &hq::CCResult::endpoint_error)
      .def_readonly("iterations", &hq::CCResult::iterations)
      .def_readonly("converged", &hq::CCResult::converged)
      .def_readonly("restart", &hq::CCResult::restart)
      .def_property_readonly("steps", [](const hq::CCResult& r) { return r.path.steps(); })
      .def_property_readonly("controls",
                             [](const hq::CCResult& r) { return r.path.controls(); })
      .def_property_readonly("endpoint", [](const hq::CCResult& r) { return hq::develop(r.path); });

  auto options = [](std::size_t steps, std::size_t restarts, std::uint64_t seed, double tol) {
    hq::CCOptions o;
    o.steps = steps;
    o.restarts = restarts;
    o.seed = seed;
    o.tol = tol;
    return o;
  };
  m.def(
      "cc_distance",
      [options](const hq::GroupElement& target, std::size_t steps, std::size_t restarts,
                std::uint64_t seed, double tol) {
        return hq::cc_distance(target, options(steps, restarts, seed, tol));
      },
      py::arg("target"), py::arg("steps") = 32, py::arg("restarts") = 8, py::arg("seed") = 7,
      py::arg("tol") = 1e-6);
  m.def(
      "cc_distance_between",
      [options](const hq::GroupElement& a, const hq::GroupElement& b, std::size_t steps,
                std::size_t restarts, std::uint64_t seed, double tol) {
        return hq::cc_distance_between(a, b, options(steps, restarts, seed, tol));
      },
      py::arg("a"), py::arg("b"), py::arg("steps") = 32, py::arg("restarts") = 8,
      py::arg("seed") = 7, py::arg("tol") = 1e-6);

  py::class_<hq::GaugeComparison>(m, "GaugeComparison")
      .def_readonly("min_ratio", &hq::GaugeComparison::min_ratio)
      .def_readonly("max_ratio", &hq::GaugeComparison::max_ratio)
      .def_readonly("evaluated", &hq::GaugeComparison::evaluated)
      .def_readonly("excluded", &hq::GaugeComparison::excluded)
      .def_readonly("ratios", &hq::GaugeComparison::ratios);
  m.def(
      "compare_to_gauge",
      [options](std::uint64_t samples, std::uint64_t seed, std::size_t steps,
                std::size_t restarts) {
        return hq::compare_to_gauge(samples, seed, options(steps, restarts, 7, 1e-6));
      },
      py::arg("samples") = 100, py::arg("seed") = 0, py::arg("steps") = 32,
      py::arg("restarts") = 8);

  m.def("commutation_table", []() {
    py::list rows;
    for (const auto& c : hq::check_commutation_table()) {
      py::dict row;
      row["relation"] = c.relation;
      row["pass"] = c.pass;
      row["computed"] = c.actual.is_zero() ? std::string("0") : c.actual.to_string();
      rows.append(row);
    }
    return rows;
  });
  m.def(
      "expand_operator",
      [](const std::string& op) -> std::string {
        if (op == "sublaplacian") return hq::sublaplacian().expansion();
        if (op == "sum-of-squares") return hq::sum_of_squares().expansion();
        if (op == "quoted-laplacian-diff") return hq::quoted_laplacian_discrepancy().expansion();
        return hq::vector_field(op).to_string();
      },
      py::arg("op"));

  m.def(
      "run_verify",
      [](std::uint64_t samples, std::uint64_t seed, std::size_t n, std::size_t cc_targets,
         std::vector<std::string> modules) {
        hq::VerifyConfig config;
        config.samples = samples;
        config.seed = seed;
        config.n = n;
        config.cc_targets = cc_targets;
        config.modules = std::move(modules);
        return json_to_python(hq::run_verify(config).to_json());
      },
      py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("n") = 1,
      py::arg("cc_targets") = 10, py::arg("modules") = std::vector<std::string>{});
}
