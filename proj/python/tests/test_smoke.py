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

import pytest

import coopmat

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def k4():
    return coopmat.graphic(4, K4_EDGES)


def test_independence_and_rank():
    m = k4()
    assert m.kind == "graphic"
    assert m.ground_size == 6
    assert m.is_independent([0, 3, 5])
    assert not m.is_independent([3, 4, 5])
    assert m.rank(list(range(6))) == 3
    assert m.fundamental_circuit([0, 3, 5], 4) == [3, 4, 5]
    assert m.fundamental_circuit([0, 1], 5) is None


def test_errors_map_to_python_exceptions():
    with pytest.raises(coopmat.LoopDetected):
        coopmat.graphic(2, [(0, 0)])
    with pytest.raises(coopmat.MalformedSpec):
        coopmat.build_matroid({"kind": "uniform", "n": 3})
    with pytest.raises(coopmat.Error):
        coopmat.build_matroid("{not json")
    with pytest.raises(coopmat.OutOfRestriction):
        coopmat.uniform(4, 2).restrict([0, 1]).is_independent([2])


def test_chromatic_number_and_formula():
    assert coopmat.chromatic_number(k4()) == 2
    assert coopmat.chromatic_number_formula(coopmat.uniform(4, 2)) == (2, [0, 1, 2, 3])
    result = coopmat.is_k_colorable(coopmat.uniform(4, 2), 1)
    assert not result["colorable"]
    assert result["certificate"]["rank_sum"] < len(result["certificate"]["x"])


def test_partition_and_union_rank():
    m = k4()
    result = coopmat.partition([m, m], list(range(6)))
    assert result["ok"]
    for part in result["parts"]:
        assert m.is_independent(part)
    assert sorted(result["parts"][0] + result["parts"][1]) == list(range(6))
    u = coopmat.uniform(2, 1)
    assert coopmat.union_rank([u, u], [0, 1]) == 2
    assert coopmat.union_rank_formula([u, u], [0, 1]) == (2, [])


def test_list_coloring_matches_oracle():
    m = k4()
    lists = [[1, 2], [2, 3], [1, 3], [1, 2], [2, 3], [1, 3]]
    colors = coopmat.coop_list_color([m, m, m], lists)
    for e, c in enumerate(colors):
        assert c in lists[e]
    for c in (1, 2, 3):
        assert m.is_independent([e for e, x in enumerate(colors) if x == c])
    assert coopmat.coop_colorable_bf([m, m, m], lists) is not None


def test_precondition_violation():
    u = coopmat.uniform(3, 1)
    with pytest.raises(coopmat.PreconditionViolated):
        coopmat.cooperative_color([u, u])


def test_games():
    u = coopmat.uniform(2, 1)
    assert coopmat.solve_indicated([u, u])["winner"] == "ann"
    assert coopmat.solve_indicated([u])["winner"] == "ben"
    assert coopmat.solve_marking([u, u], first="ben")["winner"] == "ann"
    assert coopmat.solve_painting([u, u], 2)["winner"] == "ann"
    assert coopmat.solve_painting([u, u], 2, rules="strict-all-colored")["winner"] == "ben"
    parts = coopmat.two_covering([k4()] * 4)
    assert all(sum(e in p for p in parts) == 2 for e in range(6))


def test_corpus_round_trip():
    entries = coopmat.corpus()
    assert len(entries) >= 30
    for name, spec in entries:
        m = coopmat.build_matroid(spec)
        assert coopmat.spec(m) == spec, name
    assert coopmat.count_independent_sets(k4()) == 38
    assert coopmat.verify_axioms(k4())["ok"]
    pulled = k4().pullback([5, 4, 3, 2, 1, 0])
    assert pulled.kind == "pullback"
    assert coopmat.verify_axioms(pulled)["ok"]
