"""Hypergraphs: validation, balancedness, minimal vertex covers, restriction
and seeded instance families.

Vertices are labelled 1..n. Edges are frozensets kept in input order; that
order is the canonical edge indexing E_1..E_m used everywhere downstream.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BadParams,
    DuplicateEdge,
    EmptyEdge,
    ParseError,
    SizeLimitExceeded,
    UnknownFamily,
    VertexOutOfRange,
)

MAX_BALANCE_VERTICES = 12
MAX_BALANCE_EDGES = 16

FAMILIES = ("bipartite", "tree", "path", "even_cycle", "odd_cycle", "interval")


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]
    # original labels of vertices 1..n when this graph came from ``restrict``
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], check: bool = True) -> "Hypergraph":
        h = cls(n, tuple(frozenset(e) for e in edges))
        if check:
            validate(h)
        return h

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def incidence_matrix(self) -> list[list[int]]:
        return [[1 if v in e else 0 for v in self.vertices] for e in self.edges]

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [sorted(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def key(self) -> tuple:
        return (self.n, tuple(tuple(sorted(e)) for e in self.edges))

    def __repr__(self) -> str:
        es = ", ".join("{" + ",".join(map(str, sorted(e))) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{es}])"


def parse(doc: str | dict) -> Hypergraph:
    try:
        data = json.loads(doc) if isinstance(doc, str) else doc
        n = data["n"]
        edges = data["edges"]
        if not isinstance(n, int) or n < 1:
            raise ParseError(f"n must be a positive integer, got {n!r}")
        if not all(isinstance(v, int) for e in edges for v in e):
            raise ParseError("edge entries must be integers")
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed hypergraph document: {exc}") from exc
    return Hypergraph.from_edges(n, edges)


def validate(h: Hypergraph) -> None:
    seen: dict[frozenset[int], int] = {}
    for idx, e in enumerate(h.edges):
        if not e:
            raise EmptyEdge(f"edge {idx} is empty", idx)
        bad = [v for v in e if not 1 <= v <= h.n]
        if bad:
            raise VertexOutOfRange(f"edge {idx} contains vertex {min(bad)} outside 1..{h.n}", idx)
        if e in seen:
            raise DuplicateEdge(f"edge {idx} repeats edge {seen[e]}", idx)
        seen[e] = idx


# -- balancedness ----------------------------------------------------------

@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]  # edge indices, edges[t] joins vertices[t] and vertices[t+1]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BalanceVerdict:
    balanced: bool
    cycle: CycleWitness | None = None

    def __bool__(self) -> bool:
        return self.balanced


@dataclass(frozen=True)
class MatrixVerdict:
    balanced: bool
    rows: tuple[int, ...] | None = None
    cols: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.balanced


def _check_caps(n: int, m: int, max_n: int, max_m: int) -> None:
    if n > max_n or m > max_m:
        raise SizeLimitExceeded(
            f"brute-force balancedness limited to n <= {max_n}, m <= {max_m} (got n={n}, m={m})"
        )


def find_odd_special_cycle(h: Hypergraph) -> CycleWitness | None:
    """Depth-first search for an odd cycle whose edges each meet the cycle
    in exactly two vertices. The cycle's smallest vertex is its start."""
    incident = {v: [j for j, e in enumerate(h.edges) if v in e] for v in h.vertices}

    def extend(path: list[int], used: list[int]) -> CycleWitness | None:
        start, cur = path[0], path[-1]
        on_path = set(path)
        for j in incident[cur]:
            if j in used:
                continue
            e = h.edges[j]
            # e may touch the path only at cur and the next vertex
            hits = e & on_path
            if len(path) >= 3 and len(path) % 2 == 1 and hits == {cur, start}:
                return CycleWitness(tuple(path), tuple(used + [j]))
            if hits != {cur}:
                continue
            for w in sorted(e):
                if w <= start or w in on_path:
                    continue
                # earlier cycle edges must not contain the new vertex
                if any(w in h.edges[u] for u in used):
                    continue
                found = extend(path + [w], used + [j])
                if found:
                    return found
        return None

    for v in h.vertices:
        found = extend([v], [])
        if found:
            return found
    return None


def is_balanced(
    h: Hypergraph, max_n: int = MAX_BALANCE_VERTICES, max_m: int = MAX_BALANCE_EDGES
) -> BalanceVerdict:
    _check_caps(h.n, h.m, max_n, max_m)
    cycle = find_odd_special_cycle(h)
    return BalanceVerdict(cycle is None, cycle)


def check_matrix_balanced(
    a: Sequence[Sequence[int]], max_n: int = MAX_BALANCE_VERTICES, max_m: int = MAX_BALANCE_EDGES
) -> MatrixVerdict:
    """Search for an odd square submatrix with two ones per row and column
    whose row/column support graph is a single cycle (a permuted B_k)."""
    m = len(a)
    n = len(a[0]) if m else 0
    _check_caps(n, m, max_n, max_m)
    for row in a:
        if any(x not in (0, 1) for x in row):
            raise ValueError("incidence matrix entries must be 0 or 1")
    supports = [frozenset(c for c in range(n) if a[r][c]) for r in range(m)]

    for k in range(3, min(m, n) + 1, 2):
        for cols in itertools.combinations(range(n), k):
            cs = frozenset(cols)
            cand = [r for r in range(m) if len(supports[r] & cs) == 2]
            if len(cand) < k:
                continue
            hit = _pick_rows(cand, supports, cs, k)
            if hit is not None:
                return MatrixVerdict(False, hit, cols)
    return MatrixVerdict(True)


def _pick_rows(cand, supports, cols, k):
    count = dict.fromkeys(cols, 0)
    chosen: list[int] = []

    def rec(i):
        if len(chosen) == k:
            if all(c == 2 for c in count.values()) and _single_cycle(chosen, supports, cols):
                return tuple(chosen)
            return None
        if len(cand) - i < k - len(chosen):
            return None
        for pos in range(i, len(cand)):
            r = cand[pos]
            sup = supports[r] & cols
            if any(count[c] >= 2 for c in sup):
                continue
            for c in sup:
                count[c] += 1
            chosen.append(r)
            res = rec(pos + 1)
            chosen.pop()
            for c in sup:
                count[c] -= 1
            if res is not None:
                return res
        return None

    return rec(0)


def _single_cycle(rows, supports, cols) -> bool:
    # two ones per row/column: the support graph is a union of cycles; check connectivity
    adj: dict = {}
    for r in rows:
        for c in supports[r] & cols:
            adj.setdefault(("r", r), []).append(("c", c))
            adj.setdefault(("c", c), []).append(("r", r))
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(adj)


# -- covers and restriction -------------------------------------------------

def minimal_vertex_covers(h: Hypergraph) -> list[frozenset[int]]:
    """All inclusion-minimal transversals, by size then lexicographically.

    Branches on an uncovered edge, so every leaf is a cover; the final
    antichain filter removes the non-minimal ones.
    """
    edges = sorted(set(h.edges), key=len)
    covers: set[frozenset[int]] = set()

    def rec(chosen: frozenset[int]):
        for e in edges:
            if not (e & chosen):
                for v in sorted(e):
                    rec(chosen | {v})
                return
        covers.add(chosen)

    rec(frozenset())
    minimal = [c for c in covers if not any(o < c for o in covers)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def restrict(h: Hypergraph, f: Iterable[int]) -> Hypergraph:
    """Drop the vertices in ``f`` and every edge meeting them; relabel the rest
    1..p in order. ``labels`` maps new vertex i to ``labels[i-1]`` in ``h``."""
    f = set(f)
    keep = [v for v in h.vertices if v not in f]
    new_of = {v: i for i, v in enumerate(keep, 1)}
    old_labels = h.labels or tuple(h.vertices)
    edges = tuple(frozenset(new_of[v] for v in e) for e in h.edges if not (e & f))
    return Hypergraph(len(keep), edges, tuple(old_labels[v - 1] for v in keep))


# -- instance families ------------------------------------------------------

def generate(family: str, seed: int = 0, **params) -> Hypergraph:
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    rng = random.Random(seed)
    try:
        return _GENERATORS[family](rng, **params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {family}: {exc}") from exc


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def _bipartite(rng, left: int, right: int, density: float = 0.5):
    _need(left >= 1 and right >= 1, "bipartite needs parts of size >= 1")
    _need(0.0 <= density <= 1.0, "density must lie in [0, 1]")
    edges = [
        (u, left + v)
        for u in range(1, left + 1)
        for v in range(1, right + 1)
        if rng.random() < density
    ]
    if not edges:
        edges = [(rng.randint(1, left), left + rng.randint(1, right))]
    return Hypergraph.from_edges(left + right, edges)


def _tree(rng, n: int):
    _need(n >= 2, "tree needs n >= 2")
    edges = [(rng.randint(1, v - 1), v) for v in range(2, n + 1)]
    return Hypergraph.from_edges(n, edges)


def _path(rng, n: int):
    _need(n >= 2, "path needs n >= 2")
    return Hypergraph.from_edges(n, [(v, v + 1) for v in range(1, n)])


def _cycle(n: int):
    return Hypergraph.from_edges(n, [(v, v % n + 1) for v in range(1, n + 1)])


def _even_cycle(rng, n: int):
    _need(n >= 4 and n % 2 == 0, "even_cycle needs even n >= 4")
    return _cycle(n)


def _odd_cycle(rng, n: int):
    _need(n >= 3 and n % 2 == 1, "odd_cycle needs odd n >= 3")
    return _cycle(n)


def _interval(rng, n: int, m: int | None = None, min_len: int = 2, max_len: int = 3):
    _need(n >= 1, "interval needs n >= 1")
    _need(1 <= min_len <= max_len, "interval lengths need 1 <= min_len <= max_len")
    possible = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + min_len - 1, min(n, a + max_len - 1) + 1)
    ]
    m = min(m if m is not None else n, len(possible))
    _need(m >= 1, "interval needs m >= 1")
    picked = rng.sample(possible, m)
    return Hypergraph.from_edges(n, [range(a, b + 1) for a, b in picked])


_GENERATORS = {
    "bipartite": _bipartite,
    "tree": _tree,
    "path": _path,
    "even_cycle": _even_cycle,
    "odd_cycle": _odd_cycle,
    "interval": _interval,
}
