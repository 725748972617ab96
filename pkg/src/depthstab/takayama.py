"""Degree complexes and depth through graded local cohomology.

For a monomial ideal I and a degree a in Z^n with negative support G, the
degree complex lives on the vertices outside G; a set s is a face exactly
when x^a stays outside I after inverting the variables in G ∪ s. The graded
piece H^i_m(R/I)_a has the dimension of H̃_{i-|G|-1} of that complex, and
depth R/I is the least i for which some piece is nonzero.

Two routes are provided. The generic one works for any monomial ideal and
searches a finite box of degrees. The balanced one handles powers of cover
ideals of balanced hypergraphs without ever forming the power: after
restricting to the vertices outside G, the complex is generated by the
complements of the edges whose degree sum is at most t-1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Protocol, Sequence

from .errors import NoEdges, NotBalanced, ZeroOrUnitIdeal
from .homology import QQ, FieldSpec, SimplicialComplex, reduced_betti
from .hypergraph import Hypergraph, is_balanced, restrict
from .monomial import MonomialIdeal
from .polytope import lattice_signatures


class BettiCache(Protocol):
    def get(self, c: SimplicialComplex, k: FieldSpec) -> tuple[int, ...] | None: ...

    def put(self, c: SimplicialComplex, k: FieldSpec, value: tuple[int, ...]) -> None: ...


def betti(c: SimplicialComplex, k: FieldSpec, cache: BettiCache | None = None) -> tuple[int, ...]:
    if cache is None:
        return reduced_betti(c, k)
    hit = cache.get(c, k)
    if hit is None:
        hit = reduced_betti(c, k)
        cache.put(c, k, hit)
    return hit


def negative_support(alpha: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, a in enumerate(alpha, 1) if a < 0)


@dataclass(frozen=True)
class DegreeComplexKey:
    """What determines a balanced degree complex: the inverted vertices and
    the qualifying edges of the restricted hypergraph."""

    negative_support: frozenset[int]
    qualifying_edges: frozenset[int]


# -- generic route ------------------------------------------------------------

def _violations(i: MonomialIdeal, alpha: Sequence[int], g_set: frozenset[int]) -> list[frozenset[int]]:
    """For each generator, the vertices outside G where it exceeds alpha.
    x^a lies in I R_F exactly when some violation set sits inside F."""
    out = set()
    for g in i.gens:
        out.add(frozenset(j + 1 for j in range(i.n) if (j + 1) not in g_set and g[j] > alpha[j]))
    return [v for v in out if not any(o < v for o in out)]


def _complex_avoiding(n: int, ground: Sequence[int], nonfaces: list[frozenset[int]]) -> SimplicialComplex:
    if any(not v for v in nonfaces):
        return SimplicialComplex(n, frozenset())
    faces = []
    for k in range(len(ground), -1, -1):
        for s in itertools.combinations(ground, k):
            fs = frozenset(s)
            if any(v <= fs for v in nonfaces):
                continue
            if any(fs < f for f in faces):
                continue
            faces.append(fs)
    return SimplicialComplex(n, frozenset(faces))


def degree_complex_generic(i: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    if len(alpha) != i.n:
        raise ValueError("degree has the wrong length")
    g_set = negative_support(alpha)
    ground = [v for v in range(1, i.n + 1) if v not in g_set]
    return _complex_avoiding(i.n, ground, _violations(i, alpha, g_set))


def local_cohomology_dim(
    i: MonomialIdeal, degree_index: int, alpha: Sequence[int], k: FieldSpec = QQ
) -> int:
    c = degree_complex_generic(i, alpha)
    j = degree_index - len(negative_support(alpha)) - 1
    b = reduced_betti(c, k)
    return b[j + 1] if 0 <= j + 1 < len(b) else 0


def _first_nonzero(b: tuple[int, ...]) -> int | None:
    """Index into the Betti tuple (0 means H̃_{-1}) of the lowest nonzero entry."""
    return next((idx for idx, x in enumerate(b) if x), None)


def search_box(i: MonomialIdeal, g_set: frozenset[int]):
    """Degrees with negative support exactly g_set: -1 on g_set and
    0..rho_j-1 elsewhere, rho_j being the largest x_j exponent among the
    generators. Above rho_j the complex is a cone on j, hence acyclic."""
    rho = i.max_exponents()
    ranges = [(-1,) if (j + 1) in g_set else range(rho[j]) for j in range(i.n)]
    return itertools.product(*ranges)


def depth_via_takayama(i: MonomialIdeal, k: FieldSpec = QQ, cache: BettiCache | None = None) -> int:
    if i.is_zero or i.is_unit:
        raise ZeroOrUnitIdeal("depth needs a proper nonzero ideal")
    n = i.n
    best = n + 1
    seen: set = set()
    for size in range(n + 1):
        if size >= best:
            break
        for g in itertools.combinations(range(1, n + 1), size):
            g_set = frozenset(g)
            ground = [v for v in range(1, n + 1) if v not in g_set]
            for alpha in search_box(i, g_set):
                key = (g_set, frozenset(_violations(i, alpha, g_set)))
                if key in seen:
                    continue
                seen.add(key)
                c = _complex_avoiding(n, ground, list(key[1]))
                if c.is_void:
                    continue
                idx = _first_nonzero(betti(c, k, cache))
                if idx is not None:
                    best = min(best, idx + size)
    if best > n:
        raise AssertionError("no nonvanishing local cohomology found; search box is unsound")
    return best


# -- balanced route --------------------------------------------------------------

def _balanced_complex(h: Hypergraph, qualifying) -> SimplicialComplex:
    all_v = frozenset(h.vertices)
    cand = {all_v - h.edges[j] for j in qualifying}
    return SimplicialComplex(h.n, frozenset(f for f in cand if not any(f < o for o in cand)))


def degree_complex_balanced(h: Hypergraph, alpha: Sequence[int], s: int, check: bool = True) -> SimplicialComplex:
    if check and not is_balanced(h):
        raise NotBalanced("the edge-sum description needs a balanced hypergraph")
    if len(alpha) != h.n or any(a < 0 for a in alpha):
        raise ValueError("the balanced degree complex needs a non-negative degree of length n")
    qualifying = [j for j, e in enumerate(h.edges) if sum(alpha[v - 1] for v in e) <= s - 1]
    return _balanced_complex(h, qualifying)


def degree_key(h: Hypergraph, alpha: Sequence[int], s: int) -> DegreeComplexKey:
    """Key of the degree complex of J(H)^s at an arbitrary integer degree;
    qualifying edges are indexed in the restriction to the non-negative part."""
    g_set = negative_support(alpha)
    sub = restrict(h, g_set)
    keep = [a for v, a in enumerate(alpha, 1) if v not in g_set]
    q = frozenset(j for j, e in enumerate(sub.edges) if sum(keep[v - 1] for v in e) <= s - 1)
    return DegreeComplexKey(g_set, q)


def depth_power_balanced(
    h: Hypergraph, t: int, k: FieldSpec = QQ, cache: BettiCache | None = None, check: bool = True
) -> int:
    """depth R/J(H)^t for balanced H, without forming J(H)^t.

    Ranges over the negative support F by increasing size (a degree with
    |F| inverted variables contributes depth >= |F|, so larger F cannot win
    once a value <= |F| is known), restricts H to the vertices outside F and
    collects the distinct qualifying-edge sets over {0..t}^p.
    """
    if check and not is_balanced(h):
        raise NotBalanced("fast path requires a balanced hypergraph")
    if not h.edges:
        raise NoEdges("J(H) is the unit ideal when H has no edges")
    if t < 1:
        raise ValueError("t must be >= 1")
    n = h.n
    best = n + 1
    for size in range(n):
        if size >= best:
            break
        for f in itertools.combinations(range(1, n + 1), size):
            sub = restrict(h, f)
            if not sub.edges:
                continue  # J(H) becomes the unit ideal: every degree complex is void
            for q in lattice_signatures(sub, t):
                if not q:
                    continue
                idx = _first_nonzero(betti(_balanced_complex(sub, q), k, cache))
                if idx is not None and idx + size < best:
                    best = idx + size
    if best > n:
        raise AssertionError("no nonvanishing local cohomology found")
    return best
