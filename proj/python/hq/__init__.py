# Copyright 2026 The hq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Quaternionic Heisenberg group: group law, quasi-norms, equivalence
constants, Carnot-Caratheodory distance and the left-invariant frame."""

from hq._core import (
    CCResult,
    EquivEstimate,
    GaugeComparison,
    GroupElement,
    HaarScaling,
    NormSpec,
    Quaternion,
    SandwichCheck,
    cc_distance,
    cc_distance_between,
    commutation_table,
    compare_to_gauge,
    dilate,
    dot_bar,
    estimate_constants,
    expand_operator,
    format_point,
    ginv,
    gmul,
    haar_scaling_check,
    homogeneity_defect,
    koranyi_quasi_triangle_bound,
    norm,
    parse_point,
    project_to_sphere,
    quasi_triangle_ratio,
    run_verify,
    verify_sandwich,
)

__all__ = [
    "CCResult",
    "EquivEstimate",
    "GaugeComparison",
    "GroupElement",
    "HaarScaling",
    "NormSpec",
    "Quaternion",
    "SandwichCheck",
    "cc_distance",
    "cc_distance_between",
    "commutation_table",
    "compare_to_gauge",
    "dilate",
    "dot_bar",
    "estimate_constants",
    "expand_operator",
    "format_point",
    "ginv",
    "gmul",
    "haar_scaling_check",
    "homogeneity_defect",
    "koranyi_quasi_triangle_bound",
    "norm",
    "parse_point",
    "project_to_sphere",
    "quasi_triangle_ratio",
    "run_verify",
    "verify_sandwich",
]
