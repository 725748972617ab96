import itertools
import random

import pytest

from depthstab.corpus import balanced_corpus
from depthstab.errors import NotBalanced, ZeroOrUnitIdeal
from depthstab.homology import GF2, QQ, complex_from_facets, stanley_reisner_complex
from depthstab.hypergraph import generate, restrict
from depthstab.koszul import depth_via_koszul
from depthstab.monomial import MonomialIdeal, cover_ideal, minimalize, power, random_ideal
from depthstab.stability import analytic_spread
from depthstab.takayama import (
    degree_complex_balanced,
    degree_complex_generic,
    degree_key,
    depth_power_balanced,
    depth_via_takayama,
    local_cohomology_dim,
)


def test_degree_complex_generic_examples(p3):
    m = minimalize([(1, 0), (0, 1)])
    assert degree_complex_generic(m, (0, 0)).is_empty_complex
    assert degree_complex_generic(minimalize([(1, 1)]), (1, 1)).is_void
    assert degree_complex_generic(cover_ideal(p3), (0, 0, 0)).sorted_facets() == [[1], [3]]


def test_degree_complex_balanced_examples(p3):
    assert degree_complex_balanced(p3, (1, 0, 1), 2).sorted_facets() == [[1], [3]]
    assert degree_complex_balanced(p3, (2, 1, 2), 1).is_void
    for seed in range(4):
        h = generate("tree", seed=seed, n=6)
        for s in (1, 2, 3):
            assert degree_complex_balanced(h, (0,) * 6, s) == stanley_reisner_complex(cover_ideal(h))


def test_degree_complex_balanced_requires_balanced(triangle):
    with pytest.raises(NotBalanced):
        degree_complex_balanced(triangle, (0, 0, 0), 1)
    with pytest.raises(NotBalanced):
        depth_power_balanced(triangle, 1)


def test_local_cohomology_examples(p3):
    assert local_cohomology_dim(minimalize([(1, 0), (0, 1)]), 0, (0, 0)) == 1
    j = cover_ideal(p3)
    assert local_cohomology_dim(j, 1, (0, 0, 0)) == 1
    for alpha in itertools.product(range(3), repeat=3):
        assert local_cohomology_dim(j, 0, alpha) == 0


def test_depth_examples(triangle):
    assert depth_via_takayama(minimalize([(1, 0), (0, 1)])) == 0
    assert depth_via_takayama(minimalize([(0, 1, 0), (1, 0, 1)])) == 1
    assert depth_via_takayama(cover_ideal(triangle)) == 1
    with pytest.raises(ZeroOrUnitIdeal):
        depth_via_takayama(MonomialIdeal.unit(2))


def test_depth_power_balanced_examples(single_edge, p3, k22):
    assert [depth_power_balanced(single_edge, t) for t in (1, 2, 5)] == [0, 0, 0]
    assert [depth_power_balanced(p3, t) for t in (1, 2, 3)] == [1, 1, 1]
    seq = [depth_power_balanced(k22, t) for t in range(1, 5)]
    assert all(a >= b for a, b in zip(seq, seq[1:]))
    assert seq[-1] == 4 - analytic_spread(cover_ideal(k22))


def test_balanced_complex_matches_generic_on_powers():
    """The edge-sum description against the defining membership condition on
    the materialized power, for degrees with mixed sign patterns."""
    rng = random.Random(5)
    for name, h in balanced_corpus()[:20]:
        if h.n > 6:
            continue
        for s in (1, 2, 3):
            js = power(cover_ideal(h), s)
            for _ in range(15):
                alpha = tuple(rng.randint(-1, s) for _ in range(h.n))
                generic = degree_complex_generic(js, alpha)
                g = {v for v, a in enumerate(alpha, 1) if a < 0}
                sub = restrict(h, g)
                keep = tuple(a for a in alpha if a >= 0)
                if not sub.edges:
                    assert generic.is_void
                    continue
                fast = degree_complex_balanced(sub, keep, s, check=False)
                # relabel fast complex into the original vertex numbering
                back = [{sub.labels[v - 1] for v in f} for f in fast.facets]
                assert generic == complex_from_facets(h.n, back), (name, s, alpha)
                assert degree_key(h, alpha, s).negative_support == frozenset(g)


def test_fast_path_against_both_oracles():
    for name, h in balanced_corpus():
        if h.n > 5:
            continue
        j = cover_ideal(h)
        for t in (1, 2, 3):
            jt = power(j, t)
            d = depth_power_balanced(h, t)
            assert d == depth_via_takayama(jt) == depth_via_koszul(jt), (name, t)


def test_takayama_matches_koszul_char2():
    rng = random.Random(99)
    for _ in range(40):
        i = random_ideal(rng, 4, 5, 2)
        assert depth_via_takayama(i, GF2) == depth_via_koszul(i, GF2)
