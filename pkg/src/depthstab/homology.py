"""Simplicial complexes, the Stanley-Reisner dictionary and reduced homology
over Q or a prime field.

A complex with no faces at all (VOID) and the complex {∅} (EMPTY) are kept
apart on purpose: H̃_{-1}(EMPTY) is one-dimensional, VOID has no homology.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import linalg
from .errors import VertexOutOfRange
from .monomial import MonomialIdeal, minimalize, radical, squarefree


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c < 0 or (c != 0 and (c < 2 or any(c % d == 0 for d in range(2, int(c**0.5) + 1)))):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: frozenset[frozenset[int]]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset([frozenset()])

    @property
    def dim(self) -> int:
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def sorted_facets(self) -> list[list[int]]:
        return sorted((sorted(f) for f in self.facets), key=lambda f: (len(f), f))

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                out.update(frozenset(c) for c in itertools.combinations(fl, k))
        return out

    def __contains__(self, face) -> bool:
        s = frozenset(face)
        return any(s <= f for f in self.facets)

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": self.sorted_facets(), "void": self.is_void}

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(VOID)"
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_facets())
        return f"SimplicialComplex(<{body}>)"


def complex_from_facets(n: int, sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    cand = {frozenset(s) for s in sets}
    for s in cand:
        if any(not 1 <= v <= n for v in s):
            raise VertexOutOfRange(f"face {sorted(s)} leaves 1..{n}")
    facets = frozenset(s for s in cand if not any(s < o for o in cand))
    return SimplicialComplex(n, facets)


def void(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, frozenset())


def empty(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, frozenset([frozenset()]))


def simplex(n: int, vertices: Iterable[int] | None = None) -> SimplicialComplex:
    vs = range(1, n + 1) if vertices is None else vertices
    return SimplicialComplex(n, frozenset([frozenset(vs)]))


def cone(d: SimplicialComplex) -> SimplicialComplex:
    """Cone with a fresh apex n+1 (the void complex cones to a single point)."""
    apex = d.n + 1
    if d.is_void:
        return SimplicialComplex(apex, frozenset([frozenset([apex])]))
    return SimplicialComplex(apex, frozenset(f | {apex} for f in d.facets))


def stanley_reisner_complex(i: MonomialIdeal) -> SimplicialComplex:
    """Δ(√I): subsets τ with x_τ outside the radical."""
    r = radical(i)
    supports = [frozenset(j + 1 for j, x in enumerate(g) if x) for g in r.gens]
    faces = [
        frozenset(tau)
        for k in range(i.n + 1)
        for tau in itertools.combinations(range(1, i.n + 1), k)
        if not any(s <= frozenset(tau) for s in supports)
    ]
    return complex_from_facets(i.n, faces)


def minimal_nonfaces(d: SimplicialComplex) -> list[frozenset[int]]:
    out = []
    for k in range(d.n + 1):
        for tau in itertools.combinations(range(1, d.n + 1), k):
            s = frozenset(tau)
            if s in d:
                continue
            if any(m <= s for m in out):
                continue
            out.append(s)
    return out


def stanley_reisner_ideal(d: SimplicialComplex) -> MonomialIdeal:
    return minimalize((squarefree(s, d.n) for s in minimal_nonfaces(d)), d.n)


def reduced_betti(d: SimplicialComplex, k: FieldSpec = QQ) -> tuple[int, ...]:
    """dim H̃_j(d; k) for j = -1, 0, ..., dim d (entry 0 is H̃_{-1}).

    VOID gives (0,).
    """
    if d.is_void:
        return (0,)
    common = frozenset.intersection(*d.facets)
    if common:
        # a cone over any vertex in every facet
        return (0,) * (d.dim + 2)
    return _betti(d.facets, k.characteristic)


@lru_cache(maxsize=1 << 16)
def _betti(facets: frozenset[frozenset[int]], characteristic: int) -> tuple[int, ...]:
    by_dim: dict[int, set[tuple[int, ...]]] = {}
    for f in facets:
        fl = sorted(f)
        for size in range(len(fl) + 1):
            by_dim.setdefault(size - 1, set()).update(itertools.combinations(fl, size))
    top = max(by_dim)
    faces = {j: sorted(by_dim[j]) for j in range(-1, top + 1)}
    # ranks[j] = rank of the boundary map C_j -> C_{j-1}; the augmentation is j = 0
    ranks = {-1: 0, top + 1: 0}
    for j in range(0, top + 1):
        ranks[j] = linalg.rank_sparse(boundary_rows(faces[j], faces[j - 1]), characteristic)
    return tuple(len(faces[j]) - ranks[j] - ranks[j + 1] for j in range(-1, top + 1))


def boundary_matrix(faces: list[tuple[int, ...]], lower: list[tuple[int, ...]]) -> list[list[int]]:
    """Rows index ``faces``, columns index ``lower`` (one dimension down)."""
    index = {f: c for c, f in enumerate(lower)}
    rows = []
    for f in faces:
        row = [0] * len(lower)
        for pos in range(len(f)):
            row[index[f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
        rows.append(row)
    return rows


def boundary_rows(faces: list[tuple[int, ...]], lower: list[tuple[int, ...]]) -> list[dict[int, int]]:
    """Sparse form of ``boundary_matrix``."""
    index = {f: c for c, f in enumerate(lower)}
    return [
        {index[f[:pos] + f[pos + 1:]]: (-1 if pos % 2 else 1) for pos in range(len(f))}
        for f in faces
    ]


def reduced_euler_characteristic(d: SimplicialComplex) -> int:
    if d.is_void:
        return 0
    return sum((-1) ** (len(f) - 1) for f in d.faces())


def is_acyclic(d: SimplicialComplex, k: FieldSpec = QQ) -> bool:
    return not any(reduced_betti(d, k))
