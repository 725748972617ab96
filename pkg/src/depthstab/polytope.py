"""Exact models of the edge-split inequality systems attached to a hypergraph.

For a split of the edges into an "upper" group U and a "lower" group L and
an integer t >= 1 the three systems are

    omega:   sum_{i in E} x_i <= t-1  (E in U),  >= t  (E in L),  x >= 0
    strict:  sum_{i in E} x_i <  t    (E in U),  >= t  (E in L),  x >= 0
    closed:  sum_{i in E} x_i <= t    (E in U),  >= t  (E in L),  x >= 0

Integer points of ``omega`` are exactly the degrees whose degree complex is
generated by the complements of the upper edges, so most of the work here is
integer feasibility. Lattice searches are confined to the box {0..t}^p: a
coordinate above t already pushes every edge through it past t-1, so
lowering it to t changes no constraint's truth value.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import linalg
from .errors import SizeLimitExceeded
from .hypergraph import Hypergraph

MAX_VERTICES = 10
MAX_T = 16

OMEGA, STRICT, CLOSED = "omega", "strict", "closed"


@dataclass(frozen=True)
class EdgeSplitSystem:
    hypergraph: Hypergraph
    upper: frozenset[int]
    t: int = 1
    mode: str = OMEGA

    def __post_init__(self):
        if not set(self.upper) <= set(range(self.hypergraph.m)):
            raise ValueError("upper edge indices out of range")
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.mode not in (OMEGA, STRICT, CLOSED):
            raise ValueError(f"unknown mode {self.mode!r}")

    @classmethod
    def of(cls, h: Hypergraph, upper: Iterable[int], t: int = 1, mode: str = OMEGA) -> "EdgeSplitSystem":
        return cls(h, frozenset(upper), t, mode)

    @property
    def lower(self) -> frozenset[int]:
        return frozenset(range(self.hypergraph.m)) - self.upper

    @property
    def p(self) -> int:
        return self.hypergraph.n

    def with_t(self, t: int) -> "EdgeSplitSystem":
        return EdgeSplitSystem(self.hypergraph, self.upper, t, self.mode)

    def with_mode(self, mode: str) -> "EdgeSplitSystem":
        return EdgeSplitSystem(self.hypergraph, self.upper, self.t, mode)

    def satisfied_by(self, x) -> bool:
        if any(v < 0 for v in x):
            return False
        t = self.t
        for j, e in enumerate(self.hypergraph.edges):
            s = sum(x[i - 1] for i in e)
            if j in self.upper:
                ok = s <= t - 1 if self.mode == OMEGA else (s < t if self.mode == STRICT else s <= t)
            else:
                ok = s >= t
            if not ok:
                return False
        return True

    def to_dict(self) -> dict:
        d = self.hypergraph.to_dict()
        d.update(upper=sorted(self.upper), t=self.t)
        return d


def _check(p: int, t: int = 1, max_p: int = MAX_VERTICES, max_t: int = MAX_T) -> None:
    if p > max_p or t > max_t:
        raise SizeLimitExceeded(f"polytope searches capped at p <= {max_p}, t <= {max_t}")


# -- vertices of the closed system -------------------------------------------

@lru_cache(maxsize=256)
def basic_solutions(h: Hypergraph) -> tuple[tuple[Fraction, ...], ...]:
    """Every point cut out by p independent tight constraints of the form
    edge-sum = 1 or x_i = 0, before any feasibility filtering.

    Which side of the split an edge is on never changes its tight form, so
    the candidates are shared by all splits with t = 1.
    """
    p, m = h.n, h.m
    _check(p)
    out: set[tuple[Fraction, ...]] = set()
    for k in range(0, min(m, p) + 1):
        for zeros in itertools.combinations(range(p), p - k):
            free = [i for i in range(p) if i not in zeros]
            for rows in itertools.combinations(range(m), k):
                a = [[1 if (i + 1) in h.edges[j] else 0 for i in free] for j in rows]
                sol = linalg.solve_unique(a, [1] * k) if k else ()
                if sol is None:
                    continue
                x = [Fraction(0)] * p
                for i, v in zip(free, sol):
                    x[i] = v
                out.add(tuple(x))
    return tuple(sorted(out))


@lru_cache(maxsize=256)
def _candidate_table(h: Hypergraph):
    """Candidates plus boolean tables ``at_most_one[c, j]`` and
    ``at_least_one[c, j]`` for the edge sums, so each split is a mask test."""
    cands = basic_solutions(h)
    sums = [[sum((x[i - 1] for i in e), Fraction(0)) for e in h.edges] for x in cands]
    at_most = np.array([[v <= 1 for v in row] for row in sums], dtype=bool).reshape(len(cands), h.m)
    at_least = np.array([[v >= 1 for v in row] for row in sums], dtype=bool).reshape(len(cands), h.m)
    nonneg = np.array([all(v >= 0 for v in x) for x in cands], dtype=bool)
    return cands, at_most, at_least, nonneg


def vertices_closed(s: EdgeSplitSystem) -> list[tuple[Fraction, ...]]:
    """Vertices of the closed system with t = 1, as exact rational points.

    Recession directions are not reported; an unbounded region simply lists
    its finitely many vertices.
    """
    h = s.hypergraph
    cands, at_most, at_least, nonneg = _candidate_table(h)
    upper = sorted(s.upper)
    lower = sorted(s.lower)
    ok = nonneg & at_most[:, upper].all(axis=1) & at_least[:, lower].all(axis=1)
    return [cands[i] for i in np.flatnonzero(ok)]


def scaled_vertices(s: EdgeSplitSystem, t: int) -> list[tuple[Fraction, ...]]:
    """Vertices of the closed system at level t, computed directly from its
    own tight systems (right-hand side t) rather than by scaling."""
    h = s.hypergraph
    p, m = h.n, h.m
    _check(p)
    sys_t = EdgeSplitSystem(h, s.upper, t, CLOSED)
    out: set[tuple[Fraction, ...]] = set()
    for k in range(0, min(m, p) + 1):
        for zeros in itertools.combinations(range(p), p - k):
            free = [i for i in range(p) if i not in zeros]
            for rows in itertools.combinations(range(m), k):
                a = [[1 if (i + 1) in h.edges[j] else 0 for i in free] for j in rows]
                sol = linalg.solve_unique(a, [t] * k) if k else ()
                if sol is None:
                    continue
                x = [Fraction(0)] * p
                for i, v in zip(free, sol):
                    x[i] = v
                if sys_t.satisfied_by(x):
                    out.add(tuple(x))
    return sorted(out)


@dataclass(frozen=True)
class IntegralityVerdict:
    integral: bool
    witness: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.integral


def check_vertex_integrality(s: EdgeSplitSystem) -> IntegralityVerdict:
    for v in vertices_closed(s):
        if any(x not in (0, 1) for x in v):
            return IntegralityVerdict(False, v)
    return IntegralityVerdict(True)


def integrality_over_all_splits(h: Hypergraph) -> IntegralityVerdict:
    """Integrality of the closed t = 1 system for every split of the edges."""
    for upper in _all_splits(h.m):
        v = check_vertex_integrality(EdgeSplitSystem(h, upper, 1, CLOSED))
        if not v:
            return v
    return IntegralityVerdict(True)


def _all_splits(m: int):
    for bits in range(1 << m):
        yield frozenset(j for j in range(m) if bits >> j & 1)


# -- lattice points of omega ---------------------------------------------------

def integer_point(s: EdgeSplitSystem) -> tuple[int, ...] | None:
    """Some lattice point of the omega system, or None. Backtracking over
    {0..t}^p in lexicographic order, so the answer is deterministic."""
    h, t = s.hypergraph, s.t
    _check(h.n, t)
    p = h.n
    edges = [sorted(e) for e in h.edges]
    last = [max(e) for e in edges]
    upper = s.upper
    sums = [0] * h.m
    x = [0] * p

    def rec(v: int):
        if v > p:
            return tuple(x)
        for a in range(t + 1):
            ok = True
            touched = []
            for j, e in enumerate(edges):
                if v not in h.edges[j]:
                    continue
                sums[j] += a
                touched.append(j)
                if j in upper:
                    if sums[j] > t - 1:
                        ok = False
                elif last[j] == v and sums[j] < t:
                    ok = False
            if ok:
                x[v - 1] = a
                res = rec(v + 1)
                if res is not None:
                    return res
            for j in touched:
                sums[j] -= a
        x[v - 1] = 0
        return None

    return rec(1)


def lattice_signatures(h: Hypergraph, t: int) -> frozenset[frozenset[int]]:
    """Every split (as its upper-edge index set) whose omega system at level t
    has a lattice point; equivalently the qualifying-edge sets
    {j : sum_{i in E_j} a_i <= t-1} over all a in N^p."""
    _check(h.n, t)
    return _signatures(h.key(), t)


@lru_cache(maxsize=4096)
def _signatures(key, t: int) -> frozenset[frozenset[int]]:
    p, edges = key
    m = len(edges)
    edge_sets = [frozenset(e) for e in edges]
    order = _vertex_order(p, edge_sets)
    last_step = {}
    for step, v in enumerate(order):
        for j, e in enumerate(edge_sets):
            if v in e:
                last_step[j] = step
    # one row per state: per-edge partial sums clamped at t; once an edge is
    # complete it collapses to 0 (still <= t-1) or t (past it)
    states = np.zeros((1, m), dtype=np.int16)
    for step, v in enumerate(order):
        inc = [j for j in range(m) if v in edge_sets[j]]
        if not inc:
            continue
        done = [j for j in inc if last_step[j] == step]
        blocks = []
        for a in range(t + 1):
            nxt = states.copy()
            nxt[:, inc] = np.minimum(nxt[:, inc] + a, t)
            blocks.append(nxt)
        states = np.concatenate(blocks)
        if done:
            states[:, done] = np.where(states[:, done] < t, 0, t)
        states = _unique_rows(states)
    alive = states < t
    return frozenset(frozenset(np.flatnonzero(row).tolist()) for row in alive)


def _unique_rows(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    keys = a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel()
    _, idx = np.unique(keys, return_index=True)
    return a[idx]


def _vertex_order(p: int, edges: list[frozenset[int]]) -> list[int]:
    # greedy: next vertex is the one closing the most open edges, then opening the fewest
    remaining = set(range(1, p + 1))
    opened: set[int] = set()
    order = []
    placed: set[int] = set()
    while remaining:
        def score(v):
            closes = sum(1 for j, e in enumerate(edges) if v in e and e - placed == {v})
            opens = sum(1 for j, e in enumerate(edges) if v in e and j not in opened)
            return (-closes, opens, v)

        v = min(remaining, key=score)
        order.append(v)
        placed.add(v)
        remaining.discard(v)
        opened.update(j for j, e in enumerate(edges) if v in e)
    return order


@dataclass(frozen=True)
class MonotoneReport:
    upper: frozenset[int]
    feasible: tuple[bool, ...]  # index t-1

    @property
    def monotone(self) -> bool:
        seen = False
        for f in self.feasible:
            if seen and not f:
                return False
            seen = seen or f
        return True

    def reaches(self, p: int) -> bool:
        """Feasible at level p whenever feasible at some level <= p."""
        if p > len(self.feasible):
            raise ValueError("pattern too short")
        return self.feasible[p - 1] or not any(self.feasible[:p])


def verify_monotone_feasibility(s: EdgeSplitSystem, t_max: int) -> MonotoneReport:
    feas = tuple(integer_point(s.with_t(t)) is not None for t in range(1, t_max + 1))
    return MonotoneReport(s.upper, feas)


def monotone_feasibility_all_splits(h: Hypergraph, t_max: int) -> dict[frozenset[int], tuple[bool, ...]]:
    """Feasibility pattern over t = 1..t_max for every split that is feasible
    at some level; splits absent from the result are infeasible throughout."""
    levels = [lattice_signatures(h, t) for t in range(1, t_max + 1)]
    every = set().union(*levels)
    return {u: tuple(u in lv for lv in levels) for u in sorted(every, key=lambda u: (len(u), sorted(u)))}


def is_monotone(pattern: tuple[bool, ...]) -> bool:
    return MonotoneReport(frozenset(), pattern).monotone


@dataclass
class PolytopeReport:
    integral: bool | None  # None when the instance is above the vertex-enumeration size
    fractional_witness: list[str] | None
    monotone: bool
    reaches_p: bool
    flips: list[list[int]]  # splits whose feasibility went true -> false

    def violations(self) -> list[str]:
        out = []
        if self.integral is False:
            out.append("polytope_integral")
        if not self.monotone:
            out.append("omega_monotone")
        if not self.reaches_p:
            out.append("omega_reaches_p")
        return out


def polytope_checks(h: Hypergraph, t_max: int, integrality_max_p: int = 6) -> PolytopeReport:
    """Vertex integrality over every split (small instances) and monotone
    integer feasibility of every split for t = 1..t_max."""
    integral, witness = None, None
    if h.n <= integrality_max_p:
        v = integrality_over_all_splits(h)
        integral = v.integral
        witness = None if v.integral else [str(x) for x in v.witness]
    patterns = monotone_feasibility_all_splits(h, max(t_max, h.n))
    flips = [sorted(u) for u, pat in patterns.items() if not is_monotone(pat[:t_max])]
    reaches = all(MonotoneReport(u, pat).reaches(h.n) for u, pat in patterns.items())
    return PolytopeReport(integral, witness, not flips, reaches, flips)
