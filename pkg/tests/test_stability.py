import json

import pytest

from depthstab.errors import NoEdges, ZeroIdeal
from depthstab.homology import GF2
from depthstab.hypergraph import Hypergraph, generate
from depthstab.koszul import depth_via_koszul
from depthstab.monomial import MonomialIdeal, cover_ideal, minimalize, power
from depthstab.stability import (
    CSV_HEADER,
    UNRESOLVED,
    analytic_spread,
    augmented_rank,
    check_ntf,
    depth_function,
    dstab,
    reports_to_csv,
    stabilization_index,
    verify,
)


def test_analytic_spread_examples():
    assert analytic_spread(minimalize([(1, 0), (0, 1)])) == 2
    assert analytic_spread(minimalize([(0, 1, 0), (1, 0, 1)])) == 2
    assert analytic_spread(minimalize([(2, 1, 3)])) == 1
    with pytest.raises(ZeroIdeal):
        analytic_spread(MonomialIdeal.zero(2))


def test_analytic_spread_mixed_degrees():
    # (x2, x1x3): generators of different degree, both on a compact face
    assert augmented_rank([(0, 1, 0), (1, 0, 1)]) == 2
    # C8 cover ideal: the plain augmented rank overshoots n
    j = cover_ideal(generate("even_cycle", n=8))
    assert augmented_rank(j.gens) == 9
    assert analytic_spread(j) == 4
    # (x1^2, x1x2, x2^3): three vertices, each compact edge holds two
    assert analytic_spread(minimalize([(2, 0), (1, 1), (0, 3)])) == 2


def test_depth_function_examples(single_edge, p3, triangle):
    assert depth_function(single_edge, 3) == {1: 0, 2: 0, 3: 0}
    assert depth_function(p3, 4) == {1: 1, 2: 1, 3: 1, 4: 1}
    tri = depth_function(triangle, 2)
    j = cover_ideal(triangle)
    assert tri == {1: depth_via_koszul(j), 2: depth_via_koszul(power(j, 2))}
    assert tri[1] == 1
    with pytest.raises(NoEdges):
        depth_function(Hypergraph(2, ()), 2)


def test_dstab_examples(single_edge, p3, k22):
    assert dstab(single_edge) == 1
    assert dstab(p3) == 1
    table = depth_function(k22, 4)
    d = dstab(k22)
    assert 1 <= d <= 4
    assert table[d] == table[4] and all(table[t] > table[4] for t in range(1, d))


def test_stabilization_index():
    assert stabilization_index({1: 3, 2: 2, 3: 2}) == 2
    assert stabilization_index({1: 1, 2: 1}) == 1
    assert stabilization_index({1: 2, 2: 1}) == UNRESOLVED
    assert stabilization_index({1: 0}) == 1


def test_ntf(triangle, p3):
    ok, w = check_ntf(triangle, 3)
    assert not ok and w == {"s": 2, "monomial": [1, 1, 1], "text": "x1*x2*x3"}
    assert check_ntf(p3, 3) == (True, None)


def test_verify_balanced(k22):
    r = verify(k22, instance="k22")
    assert r.balanced and not r.violations
    assert set(r.verdicts) == {"t1_nonincreasing", "t2_dstab_le_n", "limit_matches", "ntf_holds", "brodmann_bound"}
    assert all(r.verdicts.values())
    assert sorted(r.depth_values) == list(range(1, 7))
    assert r.limit_depth == 4 - r.analytic_spread


def test_verify_single_edge(single_edge):
    r = verify(single_edge)
    assert all(r.verdicts.values()) and r.dstab == 1 and r.analytic_spread == 2 and r.limit_depth == 0


def test_verify_control_not_asserted(triangle):
    r = verify(triangle)
    assert not r.balanced and r.verdicts["ntf_holds"] is False and r.violations == []
    assert r.verdicts["brodmann_bound"]


def test_report_serialization(p3):
    r = verify(p3, instance="p3")
    d = json.loads(r.to_json())
    assert d["depth_values"] == {"1": 1, "2": 1, "3": 1, "4": 1, "5": 1}
    text = reports_to_csv([r])
    lines = text.splitlines()
    assert lines[0].split(",") == CSV_HEADER
    assert len(lines) == 1 + 5
    assert lines[1].startswith("p3,3,2,1,0,1,1,1,2,")


def test_char2_matches_char0_on_small_corpus():
    # recorded, not asserted by the theorems; on these instances the fields agree
    for h in (generate("path", n=5), generate("even_cycle", n=6), generate("tree", seed=2, n=6)):
        assert depth_function(h, 3) == depth_function(h, 3, GF2)
