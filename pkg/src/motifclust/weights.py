"""Exact extended-real weights and the extended network container.

Finite weights are :class:`fractions.Fraction`; ``+inf`` is the singleton
:data:`INF`, which compares above every number and equals only itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Sequence, Tuple, Union

from .errors import ParseError, PreconditionError


class _Infinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("motifclust.INF")

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __reduce__(self):
        return "INF"


INF = _Infinity()
Weight = Union[Fraction, _Infinity]


def is_finite(w: Weight) -> bool:
    return w is not INF


def to_weight(x: object) -> Weight:
    """Parse a weight: ints, floats, decimal or ``p/q`` strings, or ``"inf"``."""
    if x is INF:
        return INF
    if isinstance(x, bool):
        raise ParseError(f"boolean {x!r} is not a weight")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if math.isinf(x) and x > 0:
            return INF
        if not math.isfinite(x):
            raise ParseError(f"weight {x!r} is not finite or +inf")
        return Fraction(repr(x))
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "infinity", "+infinity"):
            return INF
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot read weight {x!r}") from None
    raise ParseError(f"cannot read weight {x!r}")


def _is_decimal(q: Fraction) -> bool:
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def format_weight(w: Weight) -> Union[int, str]:
    """JSON-ready form: integers stay integers, others become exact strings."""
    if w is INF:
        return "inf"
    if w.denominator == 1:
        return int(w)
    if _is_decimal(w):
        # exact: finite binary/quintic expansion
        digits = 0
        d = w.denominator
        while d != 1:
            digits += 1
            d = d // math.gcd(d, 10)
        scaled = w * 10 ** digits
        sign = "-" if scaled < 0 else ""
        mag = abs(int(scaled))
        whole, frac = divmod(mag, 10 ** digits)
        return f"{sign}{whole}.{str(frac).rjust(digits, '0').rstrip('0')}"
    return f"{w.numerator}/{w.denominator}"


@dataclass(frozen=True)
class ExtendedNetwork:
    """Finite point set with a weight for every ordered pair; diagonal finite.

    ``weights[i][j]`` is the weight from ``points[i]`` to ``points[j]``.
    """

    points: Tuple[str, ...]
    weights: Tuple[Tuple[Weight, ...], ...]

    def __init__(self, points: Iterable[str], weights: Iterable[Iterable[object]]):
        pts = tuple(points)
        rows = tuple(tuple(to_weight(w) for w in row) for row in weights)
        if len(set(pts)) != len(pts):
            raise PreconditionError("duplicate point identifiers", "extended network")
        if len(rows) != len(pts) or any(len(r) != len(pts) for r in rows):
            raise PreconditionError("weight matrix must be square and match the points", "extended network")
        for i, p in enumerate(pts):
            if rows[i][i] is INF:
                raise PreconditionError(f"diagonal weight of {p!r} is +inf", "extended network (finite diagonal)")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", rows)

    @classmethod
    def from_function(cls, points: Sequence[str], fn) -> "ExtendedNetwork":
        return cls(points, [[fn(x, y) for y in points] for x in points])

    @cached_property
    def index(self) -> Dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def weight(self, x: str, y: str) -> Weight:
        return self.weights[self.index[x]][self.index[y]]

    def entries(self) -> Iterable[Weight]:
        for row in self.weights:
            yield from row

    def is_finite(self) -> bool:
        return all(w is not INF for w in self.entries())

    def mapped(self, fn) -> "ExtendedNetwork":
        """Apply ``fn`` to every finite weight."""
        return ExtendedNetwork(self.points, [[w if w is INF else fn(w) for w in row] for row in self.weights])
