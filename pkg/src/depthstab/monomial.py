"""Monomial ideals as minimal generating sets of exponent vectors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MixedAmbient, NegativeExponentOutsideF, SizeLimitExceeded

Monomial = tuple[int, ...]

MAX_SYMBOLIC_POWER = 6
MAX_SYMBOLIC_VARS = 10
MAX_EXPONENT = 2**31 - 1


def grlex_key(a: Monomial):
    return (sum(a), tuple(-x for x in a))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if any(x > MAX_EXPONENT for x in out):
        raise OverflowError("exponent overflow")
    return out


def format_monomial(a: Monomial) -> str:
    parts = []
    for i, e in enumerate(a, 1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def squarefree(vertices: Iterable[int], n: int) -> Monomial:
    vs = set(vertices)
    return tuple(1 if i in vs else 0 for i in range(1, n + 1))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def from_list(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimalize([tuple(g) for g in gens], n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def max_exponents(self) -> Monomial:
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.n))

    def lcm_exponent(self) -> Monomial:
        return self.max_exponents()

    def to_list(self) -> list[list[int]]:
        return [list(g) for g in self.gens]

    def __contains__(self, a: Sequence[int]) -> bool:
        return any(divides(g, a) for g in self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def _ambient(gens: Sequence[Monomial], n: int | None) -> int:
    lengths = {len(g) for g in gens}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise MixedAmbient(f"monomials of different lengths {sorted(lengths)}")
    if not lengths:
        raise MixedAmbient("cannot infer ambient dimension from an empty generator list")
    return lengths.pop()


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    gens = sorted({tuple(g) for g in gens}, key=grlex_key)
    n = _ambient(gens, n)
    keep: list[Monomial] = []
    # grlex order puts every proper divisor before its multiples
    for g in gens:
        if any(x < 0 for x in g):
            raise ValueError("negative exponent in monomial ideal generator")
        if not any(divides(k, g) for k in keep):
            keep.append(g)
    return MonomialIdeal(n, tuple(keep))


def _same(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise MixedAmbient(f"ambient mismatch: {a.n} vs {b.n}")


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same(a, b)
    return minimalize((mul(x, y) for x in a.gens for y in b.gens), a.n)


def power(i: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise ValueError("power needs t >= 1")
    result = i
    for _ in range(t - 1):
        result = product(result, i)
    return result


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same(a, b)
    return minimalize((lcm(x, y) for x in a.gens for y in b.gens), a.n)


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _same(a, b)
    return a.gens == b.gens


def difference_witness(a: MonomialIdeal, b: MonomialIdeal) -> Monomial | None:
    """A minimal generator of one ideal missing from the other, if any."""
    _same(a, b)
    for g in b.gens:
        if g not in a:
            return g
    for g in a.gens:
        if g not in b:
            return g
    return None


def radical(i: MonomialIdeal) -> MonomialIdeal:
    if i.is_zero:
        return i
    return minimalize((tuple(1 if x else 0 for x in g) for g in i.gens), i.n)


def prime(vertices: Iterable[int], n: int) -> MonomialIdeal:
    """The monomial prime (x_i | i in vertices); the zero ideal when empty."""
    vs = sorted(set(vertices))
    if not vs:
        return MonomialIdeal.zero(n)
    return MonomialIdeal(n, tuple(squarefree([v], n) for v in vs))


def cover_ideal(h) -> MonomialIdeal:
    """J(H), generated by the squarefree monomials of the minimal vertex covers."""
    from .hypergraph import minimal_vertex_covers

    return minimalize((squarefree(c, h.n) for c in minimal_vertex_covers(h)), h.n)


def cover_ideal_by_intersection(h) -> MonomialIdeal:
    """J(H) as the intersection of the edge primes; the unit ideal with no edges."""
    result = MonomialIdeal.unit(h.n)
    for e in h.edges:
        result = intersect(result, prime(e, h.n))
    return result


def symbolic_power(h, s: int, max_s: int = MAX_SYMBOLIC_POWER, max_n: int = MAX_SYMBOLIC_VARS) -> MonomialIdeal:
    if s < 1:
        raise ValueError("symbolic power needs s >= 1")
    if s > max_s or h.n > max_n:
        raise SizeLimitExceeded(f"symbolic powers capped at s <= {max_s}, n <= {max_n}")
    result = MonomialIdeal.unit(h.n)
    for e in h.edges:
        result = intersect(result, power(prime(e, h.n), s))
    return result


def contains(i: MonomialIdeal, alpha: Sequence[int], f: Iterable[int] = ()) -> bool:
    """Membership of x^alpha in the localization of ``i`` at the variables in f
    (1-based). Coordinates inside f are ignored."""
    inverted = {v - 1 for v in f}
    rest = [j for j in range(i.n) if j not in inverted]
    if any(alpha[j] < 0 for j in rest):
        raise NegativeExponentOutsideF("negative exponent outside the inverted variables")
    return any(all(g[j] <= alpha[j] for j in rest) for g in i.gens)


def random_ideal(rng, n: int, max_gens: int, max_exp: int) -> MonomialIdeal:
    """A random proper nonzero monomial ideal (used by the oracle corpus)."""
    while True:
        k = rng.randint(1, max_gens)
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(k)]
        ideal = minimalize(gens, n)
        if not ideal.is_unit:
            return ideal
