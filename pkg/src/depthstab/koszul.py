"""Brute-force depth through multigraded Betti numbers.

beta_{j,a}(I) = dim H̃_{j-1}(K^a(I)) where the upper Koszul complex K^a(I)
consists of the squarefree τ ⊆ supp(a) with x^{a-τ} in I. Projective
dimension then gives depth by Auslander-Buchsbaum.

Deliberately shares nothing with the local cohomology engine beyond the
homology and monomial primitives.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from .errors import ZeroOrUnitIdeal
from .homology import QQ, FieldSpec, SimplicialComplex, complex_from_facets, reduced_betti
from .monomial import MonomialIdeal, divides

BettiTable = dict[tuple[int, tuple[int, ...]], int]


def upper_koszul_complex(i: MonomialIdeal, alpha: Sequence[int]) -> SimplicialComplex:
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("multidegree must be non-negative")
    support = [j + 1 for j, a in enumerate(alpha) if a > 0]
    # τ is a face iff some generator g | x^a avoids τ on its tight coordinates
    # (g_j = a_j), so the facets are supp(a) minus those coordinates.
    facets = []
    for g in i.gens:
        if divides(g, alpha):
            tight = {j + 1 for j in range(i.n) if alpha[j] > 0 and g[j] == alpha[j]}
            facets.append([v for v in support if v not in tight])
    return complex_from_facets(i.n, facets)


def _check(i: MonomialIdeal) -> None:
    if i.is_zero or i.is_unit:
        raise ZeroOrUnitIdeal("Betti numbers and depth need a proper nonzero ideal")


def betti_table(i: MonomialIdeal, k: FieldSpec = QQ) -> BettiTable:
    _check(i)
    table: BettiTable = {}
    top = i.lcm_exponent()
    for alpha in itertools.product(*(range(e + 1) for e in top)):
        if alpha not in i:
            continue  # the complex is void
        b = reduced_betti(upper_koszul_complex(i, alpha), k)
        for idx, dim in enumerate(b):
            if dim:
                table[(idx, alpha)] = dim  # entry idx is H̃_{idx-1}, i.e. beta_idx
    return table


def total_betti(table: BettiTable) -> dict[int, int]:
    out: dict[int, int] = {}
    for (j, _), d in table.items():
        out[j] = out.get(j, 0) + d
    return dict(sorted(out.items()))


def projective_dimension(i: MonomialIdeal, k: FieldSpec = QQ) -> int:
    """pd R/I = 1 + pd I."""
    table = betti_table(i, k)
    return 1 + max(j for j, _ in table)


def depth_via_koszul(i: MonomialIdeal, k: FieldSpec = QQ) -> int:
    return i.n - projective_dimension(i, k)
