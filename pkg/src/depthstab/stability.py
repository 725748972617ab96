"""Depth functions, the index of depth stability, analytic spread and the
per-instance verification record."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import linprog

from . import linalg
from .errors import NoEdges, TheoremViolation, ZeroIdeal
from .homology import QQ, FieldSpec
from .hypergraph import Hypergraph, is_balanced
from .monomial import (
    MonomialIdeal,
    cover_ideal,
    difference_witness,
    equals,
    format_monomial,
    product,
    symbolic_power,
)
from .takayama import BettiCache, depth_power_balanced, depth_via_takayama

UNRESOLVED = "UNRESOLVED"

VERDICTS = ("t1_nonincreasing", "t2_dstab_le_n", "limit_matches", "ntf_holds", "brodmann_bound")


# -- analytic spread ---------------------------------------------------------

def augmented_rank(gens) -> int:
    """Rank of the generator exponent vectors, each extended by a trailing 1."""
    return linalg.rank_rational([list(g) + [1] for g in gens])


def _on_common_compact_face(points: np.ndarray, subset: list[int]) -> bool:
    """Is there a weight w > 0 under which every point of ``subset`` attains
    the minimum of <w, .> over all points? Such minimizing sets are exactly
    the compact faces of the Newton polyhedron."""
    n = points.shape[1]
    base = points[subset[0]]
    a_eq = [np.append(points[i] - base, 0.0) for i in subset[1:]]
    # <w, b - base> >= 0 for every point b
    a_ub = [np.append(base - b, 0.0) for b in points]
    res = linprog(
        c=np.zeros(n + 1),
        A_ub=np.array(a_ub),
        b_ub=np.zeros(len(a_ub)),
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=np.zeros(len(a_eq)) if a_eq else None,
        bounds=[(1, None)] * n + [(0, 0)],
        method="highs",
    )
    return res.status == 0


def analytic_spread(i: MonomialIdeal) -> int:
    """Largest augmented rank of a set of generators lying on one compact
    face of the Newton polyhedron conv(gens) + R^n_{>=0}.

    For ideals generated in a single degree every generator lies on the
    face cut out by w = (1, ..., 1), and this reduces to ``augmented_rank``.
    """
    if i.is_zero:
        raise ZeroIdeal("analytic spread of the zero ideal is undefined")
    gens = list(i.gens)
    if len({sum(g) for g in gens}) == 1:
        return augmented_rank(gens)
    pts = np.array(gens, dtype=float)
    cap = min(i.n, augmented_rank(gens))
    best = 1

    def grow(subset: list[int], r: int):
        nonlocal best
        best = max(best, r)
        if best >= cap:
            return
        for nxt in range(subset[-1] + 1, len(gens)):
            if r + (len(gens) - nxt) <= best:
                return
            cand = subset + [nxt]
            # only affinely independent extensions can raise the rank; a
            # dependent point adds nothing any later extension could not
            r2 = augmented_rank([gens[j] for j in cand])
            if r2 == r:
                continue
            if _on_common_compact_face(pts, cand):
                grow(cand, r2)
                if best >= cap:
                    return

    for start in range(len(gens)):
        if _on_common_compact_face(pts, [start]):
            grow([start], 1)
        if best >= cap:
            break
    return best


# -- depth functions ----------------------------------------------------------

def depth_function(
    h: Hypergraph,
    t_max: int,
    k: FieldSpec = QQ,
    cache: BettiCache | None = None,
    balanced: bool | None = None,
) -> dict[int, int]:
    """t -> depth R/J(H)^t for t = 1..t_max; the edge-sum fast path when H is
    balanced, materialized powers through the generic engine otherwise."""
    if not h.edges:
        raise NoEdges("J(H) is the unit ideal when H has no edges")
    if balanced is None:
        balanced = bool(is_balanced(h))
    if balanced:
        return {t: depth_power_balanced(h, t, k, cache, check=False) for t in range(1, t_max + 1)}
    j = cover_ideal(h)
    out = {}
    jt = j
    for t in range(1, t_max + 1):
        if t > 1:
            jt = product(jt, j)
        out[t] = depth_via_takayama(jt, k, cache)
    return out


def stabilization_index(values: dict[int, int]) -> int | str:
    """First t after which the recorded table is constant; UNRESOLVED when
    it still changes at the last recorded step."""
    ts = sorted(values)
    last = values[ts[-1]]
    s = ts[-1]
    for t in reversed(ts):
        if values[t] != last:
            break
        s = t
    if s == ts[-1] and len(ts) > 1:
        return UNRESOLVED
    return s


def dstab(h: Hypergraph, k: FieldSpec = QQ, cache: BettiCache | None = None) -> int:
    """Least t <= n with depth R/J(H)^t = n - l(J(H)), for balanced H."""
    if not h.edges:
        raise NoEdges("J(H) is the unit ideal when H has no edges")
    target = h.n - analytic_spread(cover_ideal(h))
    table = {}
    for t in range(1, h.n + 1):
        table[t] = depth_power_balanced(h, t, k, cache)
        if table[t] == target:
            return t
    report = DepthReport(
        instance=repr(h), hypergraph=h.to_dict(), characteristic=k.characteristic,
        balanced=True, depth_values=table, dstab=UNRESOLVED,
        analytic_spread=h.n - target, limit_depth=target,
    )
    raise TheoremViolation(f"depth never reached {target} by t = {h.n}", report)


# -- verification record ----------------------------------------------------------

@dataclass
class DepthReport:
    instance: str
    hypergraph: dict
    characteristic: int
    balanced: bool
    depth_values: dict[int, int]
    dstab: int | str
    analytic_spread: int
    limit_depth: int
    verdicts: dict[str, bool] = field(default_factory=dict)
    ntf_witness: dict | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.hypergraph["n"]

    @property
    def m(self) -> int:
        return len(self.hypergraph["edges"])

    def to_dict(self) -> dict:
        d = asdict(self)
        d["depth_values"] = {str(t): v for t, v in sorted(self.depth_values.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def csv_rows(self) -> list[list]:
        flags = [int(self.verdicts.get(v, False)) for v in VERDICTS]
        return [
            [self.instance, self.n, self.m, int(self.balanced), self.characteristic, t, d,
             self.dstab, self.analytic_spread, *flags]
            for t, d in sorted(self.depth_values.items())
        ]


CSV_HEADER = ["instance", "n", "m", "balanced", "char", "t", "depth", "dstab", "analytic_spread", *VERDICTS]


def reports_to_csv(reports: list[DepthReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerows(r.csv_rows())
    return buf.getvalue()


def check_ntf(h: Hypergraph, s_max: int) -> tuple[bool, dict | None]:
    """Compare ordinary and symbolic powers of J(H) for s = 1..s_max."""
    j = cover_ideal(h)
    js = j
    for s in range(1, s_max + 1):
        if s > 1:
            js = product(js, j)
        sym = symbolic_power(h, s)
        if not equals(js, sym):
            w = difference_witness(js, sym)
            return False, {"s": s, "monomial": list(w), "text": format_monomial(w)}
    return True, None


def verify(
    h: Hypergraph,
    k: FieldSpec = QQ,
    t_max: int | None = None,
    s_ntf_max: int | None = None,
    instance: str | None = None,
    cache: BettiCache | None = None,
    suites: tuple[str, ...] = ("t1", "t2", "ntf"),
) -> DepthReport:
    """Compute the depth table and fill every verdict.

    Verdicts are asserted (collected in ``violations``) only for balanced
    hypergraphs; for the rest they are recorded as observations.
    """
    if not h.edges:
        raise NoEdges("J(H) is the unit ideal when H has no edges")
    n = h.n
    t_max = t_max or n + 2
    s_ntf_max = s_ntf_max if s_ntf_max is not None else min(4, n)
    balanced = bool(is_balanced(h))
    values = depth_function(h, t_max, k, cache, balanced=balanced)
    ell = analytic_spread(cover_ideal(h))
    limit = n - ell
    report = DepthReport(
        instance=instance or repr(h),
        hypergraph=h.to_dict(),
        characteristic=k.characteristic,
        balanced=balanced,
        depth_values=values,
        dstab=stabilization_index(values),
        analytic_spread=ell,
        limit_depth=limit,
    )
    v = report.verdicts
    ts = sorted(values)
    if "t1" in suites:
        v["t1_nonincreasing"] = all(values[a] >= values[a + 1] for a in ts[:-1])
    if "t2" in suites:
        tail = [t for t in ts if t >= n]
        v["limit_matches"] = bool(tail) and all(values[t] == limit for t in tail)
        d = report.dstab
        v["t2_dstab_le_n"] = isinstance(d, int) and d <= n and v["limit_matches"]
        v["brodmann_bound"] = values[ts[-1]] <= limit
    if "ntf" in suites:
        ok, witness = check_ntf(h, s_ntf_max)
        v["ntf_holds"] = ok
        report.ntf_witness = witness
    if balanced:
        report.violations = [name for name, ok in v.items() if not ok]
    return report
