# Copyright 2026 The qpk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact pre/post-selection analysis of quantum paradoxical knowledge."""

from ._core import (
    ComplexRational,
    Family,
    NonOverlappingError,
    ParseError,
    QpkError,
    SchemaError,
    SizeError,
    StateVector,
    all_relations,
    analyze_scenario,
    builtin_names,
    check_consistency,
    chroma_scenario,
    classify,
    extract_knowledge,
    find_paradoxes,
    inner,
    lr_strings,
    min_family_experiment,
    one_to_one_functions,
    product_state,
    star_graphs,
    ternary_energy,
    togetherness3,
    total_orders,
    uniform_psi,
    verify,
)

__all__ = [
    "ComplexRational",
    "Family",
    "NonOverlappingError",
    "ParseError",
    "QpkError",
    "SchemaError",
    "SizeError",
    "StateVector",
    "all_relations",
    "analyze_scenario",
    "builtin_names",
    "check_consistency",
    "chroma_scenario",
    "classify",
    "extract_knowledge",
    "find_paradoxes",
    "inner",
    "lr_strings",
    "min_family_experiment",
    "one_to_one_functions",
    "product_state",
    "star_graphs",
    "ternary_energy",
    "togetherness3",
    "total_orders",
    "uniform_psi",
    "verify",
]
