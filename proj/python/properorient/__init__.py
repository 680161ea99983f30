# Copyright 2026 The porient Authors
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

"""Proper orientations with bounded maximum outdegree."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    InvariantError,
    ParseError,
    PorientError,
    PreconditionError,
    family_names,
    gen_family,
    gen_tightness,
    min_orientation_k,
    parse_graph,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "InvariantError",
    "ParseError",
    "PorientError",
    "PreconditionError",
    "exact_mad",
    "exact_proper_chromatic",
    "family_names",
    "gen_family",
    "gen_tightness",
    "min_orientation_k",
    "orient",
    "parse_graph",
    "verify",
]


def exact_mad(n, edges):
    num, den = _core.exact_mad(n, edges)
    return Fraction(int(num), int(den))


def exact_proper_chromatic(n, edges, max_edges=20, max_vertices=20, time_ms=10000):
    return _core.exact_proper_chromatic(n, edges, max_edges, max_vertices, time_ms)


def orient(n, edges, partition=None, schedule="auto", k=None):
    """Runs the pipeline. The "report" entry is decoded from JSON."""
    res = _core.orient(n, edges, partition, schedule, -1 if k is None else k)
    res["report"] = json.loads(res["report"])
    return res
