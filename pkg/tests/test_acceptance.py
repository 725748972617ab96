"""Acceptance criteria, one test each. Every test records a PASS/FAIL line
that is echoed in the terminal summary."""
import itertools
import json
import random
import subprocess
import sys
import time

import pytest

from depthstab.corpus import DEFAULT_SEED, balanced_corpus
from depthstab.homology import (
    QQ,
    complex_from_facets,
    cone,
    is_acyclic,
    reduced_betti,
    reduced_euler_characteristic,
)
from depthstab.hypergraph import generate, is_balanced
from depthstab.koszul import depth_via_koszul
from depthstab.monomial import cover_ideal, random_ideal
from depthstab.polytope import (
    EdgeSplitSystem,
    check_vertex_integrality,
    integrality_over_all_splits,
    is_monotone,
    monotone_feasibility_all_splits,
)
from depthstab.stability import analytic_spread, depth_function, dstab, verify
from depthstab.takayama import depth_via_takayama

from conftest import ACCEPTANCE_LINES


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def corpus():
    return balanced_corpus(DEFAULT_SEED)


@pytest.fixture(scope="module")
def reports(corpus):
    return {name: verify(h, QQ, instance=name) for name, h in corpus}


def test_1_oracle_equivalence():
    rng = random.Random(2024)
    start = time.perf_counter()
    mismatches = []
    count = 0
    while count < 200:
        n = rng.randint(1, 5)
        i = random_ideal(rng, n, 6, 3)
        count += 1
        a, b = depth_via_takayama(i, QQ), depth_via_koszul(i, QQ)
        if a != b:
            mismatches.append((i.to_list(), a, b))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed <= 300
    record(1, ok, f"{count} random ideals, {len(mismatches)} mismatches, {elapsed:.1f}s (limit 300s)")
    assert not mismatches, mismatches[:3]
    assert elapsed <= 300


def test_2_nonincreasing(corpus, reports):
    bad = [name for name, r in reports.items() if not r.verdicts["t1_nonincreasing"]]
    for name, h in corpus:
        vals = reports[name].depth_values
        assert sorted(vals) == list(range(1, h.n + 3))
    ok = len(corpus) >= 50 and not bad
    record(2, ok, f"{len(corpus)} balanced instances, t = 1..n+2, {len(bad)} violations")
    assert len(corpus) >= 50
    assert not bad


def test_3_limit_and_dstab(corpus, reports):
    bad = []
    for name, h in corpus:
        r = reports[name]
        limit = h.n - analytic_spread(cover_ideal(h))
        tail_ok = all(r.depth_values[t] == limit for t in range(h.n, h.n + 3))
        if not (tail_ok and isinstance(r.dstab, int) and r.dstab <= h.n):
            bad.append(name)
    record(3, not bad, f"depth(t) = n - l for n <= t <= n+2 and dstab <= n on {len(corpus)} instances, "
                       f"{len(bad)} violations")
    assert not bad


def test_4_normally_torsion_free(corpus, reports):
    bad = [name for name, r in reports.items() if not r.verdicts["ntf_holds"]]
    tri = verify(generate("odd_cycle", n=3), QQ, suites=("ntf",))
    control_ok = tri.verdicts["ntf_holds"] is False and tri.ntf_witness == {
        "s": 2, "monomial": [1, 1, 1], "text": "x1*x2*x3"}
    record(4, not bad and control_ok,
           f"J^s = J^(s) for s <= min(4,n): {len(bad)} violations; triangle fails at s=2 "
           f"with witness {tri.ntf_witness and tri.ntf_witness['text']}")
    assert not bad
    assert control_ok


def test_5_vertex_integrality(corpus):
    small = [(name, h) for name, h in corpus if h.n <= 6]
    bad = [name for name, h in small if not integrality_over_all_splits(h).integral]
    tri = generate("odd_cycle", n=3)
    v = check_vertex_integrality(EdgeSplitSystem.of(tri, range(tri.m)))
    witness = [str(x) for x in v.witness] if v.witness else None
    control_ok = not v.integral and witness == ["1/2", "1/2", "1/2"]
    record(5, not bad and control_ok,
           f"all splits integral on {len(small)} instances with n <= 6 ({len(bad)} fractional); "
           f"triangle all-upper vertex {witness}")
    assert not bad
    assert control_ok


def test_6_monotone_feasibility(corpus):
    flips = 0
    splits = 0
    for name, h in corpus:
        for upper, pattern in monotone_feasibility_all_splits(h, h.n + 2).items():
            splits += 1
            if not is_monotone(pattern):
                flips += 1
    record(6, flips == 0, f"{splits} splits over {len(corpus)} instances, t <= n+2, {flips} true->false flips")
    assert flips == 0


def test_7_fixed_points():
    edge = generate("path", n=2)
    p3 = generate("path", n=3)
    got = {
        "edge_depth": depth_function(edge, 4),
        "edge_dstab": dstab(edge),
        "edge_l": analytic_spread(cover_ideal(edge)),
        "p3_depth": depth_function(p3, 5),
        "p3_dstab": dstab(p3),
        "p3_l": analytic_spread(cover_ideal(p3)),
    }
    ok = (
        set(got["edge_depth"].values()) == {0} and got["edge_dstab"] == 1 and got["edge_l"] == 2
        and set(got["p3_depth"].values()) == {1} and got["p3_dstab"] == 1 and got["p3_l"] == 2
    )
    record(7, ok, "single edge depth 0, dstab 1, l 2; P3 depth 1, dstab 1, l 2")
    assert ok, got


def test_8_homology_sanity():
    rng = random.Random(8)
    bad_euler = bad_cone = 0
    for _ in range(1000):
        n = rng.randint(1, 7)
        sets = [{v for v in range(1, n + 1) if rng.random() < 0.5} for _ in range(rng.randint(0, 6))]
        d = complex_from_facets(n, sets)
        b = reduced_betti(d)
        if sum((-1) ** (i - 1) * x for i, x in enumerate(b)) != reduced_euler_characteristic(d):
            bad_euler += 1
        if not is_acyclic(cone(d)):
            bad_cone += 1
    ok = bad_euler == 0 and bad_cone == 0
    record(8, ok, f"1000 random complexes: {bad_euler} Euler failures, {bad_cone} non-acyclic cones")
    assert ok


def test_9_determinism(tmp_path):
    outs = []
    for jobs, run in ((1, "a"), (1, "b"), (3, "c")):
        d = tmp_path / run
        proc = subprocess.run(
            [sys.executable, "-m", "depthstab.cli", "verify", "--suite", "all",
             "--seed", str(DEFAULT_SEED), "--jobs", str(jobs), "--out", str(d)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        outs.append(((d / "report.json").read_bytes(), (d / "report.csv").read_bytes()))
    ok = outs[0] == outs[1] == outs[2]
    n_reports = len(json.loads(outs[0][0])["reports"])
    record(9, ok, f"three full verify --suite all runs ({n_reports} instances, jobs 1, 1, 3) byte-identical")
    assert ok
