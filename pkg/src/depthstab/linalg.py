"""Exact linear algebra on small integer matrices.

Ranks over the rationals use fraction-free (Bareiss) elimination, so every
intermediate stays an integer. Ranks over a prime field reduce modulo p.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, n_rows):
            row = m[r]
            f = row[col]
            if f == 0:
                if p != prev:
                    # keep the Bareiss invariant: every row below is scaled alike
                    for c in range(col + 1, n_cols):
                        row[c] = row[c] * p // prev
                continue
            for c in range(col + 1, n_cols):
                row[c] = (row[c] * p - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        prow = [(x * inv) % p for x in m[rank]]
        m[rank] = prow
        for r in range(rank + 1, n_rows):
            f = m[r][col]
            if f:
                m[r] = [(a - f * b) % p for a, b in zip(m[r], prow)]
        rank += 1
    return rank


def rank(rows: Sequence[Sequence[int]], characteristic: int = 0) -> int:
    if characteristic == 0:
        return rank_rational(rows)
    return rank_mod_p(rows, characteristic)


def solve_unique(a: Sequence[Sequence[int]], b: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Solve the square system ``a x = b`` exactly; None when ``a`` is singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        prow = m[col]
        inv = 1 / prow[col]
        for c in range(col, n + 1):
            prow[c] *= inv
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                row = m[r]
                for c in range(col, n + 1):
                    row[c] -= f * prow[c]
    return tuple(m[r][n] for r in range(n))


def rank_sparse(rows: Sequence[dict[int, int]], characteristic: int = 0) -> int:
    """Rank of a sparse matrix given as ``{column: entry}`` rows.

    Row reduction keyed on leading column. Boundary matrices have ±1
    entries, so over Q the multipliers almost always stay integral; a
    Fraction appears only when they do not.
    """
    p = characteristic
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {c: (v % p if p else v) for c, v in row.items()}
        r = {c: v for c, v in r.items() if v}
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                pivots[c] = r
                break
            if p:
                f = r[c] * pow(pr[c], -1, p) % p
            else:
                q, rem = divmod(r[c], pr[c])
                f = q if rem == 0 else Fraction(r[c], pr[c])
            for k, v in pr.items():
                nv = r.get(k, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)
