# Copyright 2026 The Authors.
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

"""Matroid partitioning, cooperative coloring and coloring games."""

import json

from ._core import (
    Error,
    LoopDetected,
    MalformedSpec,
    Matroid,
    NotIndependent,
    OutOfRestriction,
    PreconditionViolated,
    StateSpaceTooLarge,
    TooLarge,
    chromatic_number,
    chromatic_number_formula,
    coop_colorable_bf,
    coop_list_color,
    cooperative_color,
    count_independent_sets,
    is_k_colorable,
    partition,
    solve_indicated,
    solve_marking,
    solve_painting,
    two_covering,
    union_rank,
    union_rank_formula,
    verify_axioms,
)
from . import _core


def build_matroid(spec):
    """Builds an oracle from a spec dict or its JSON text."""
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    return _core.build_matroid_json(spec)


def uniform(n, rank):
    return build_matroid({"kind": "uniform", "n": n, "rank": rank})


def graphic(vertices, edges):
    return build_matroid(
        {"kind": "graphic", "vertices": vertices, "edges": [list(e) for e in edges]})


def corpus():
    """Built-in matroids as (name, spec dict) pairs."""
    return [(name, json.loads(text)) for name, text in _core.corpus_json()]


def spec(matroid):
    text = matroid.spec_json()
    return None if text is None else json.loads(text)


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
