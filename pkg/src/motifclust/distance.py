"""Correspondences, distortion and the network distance.

The exact solver relies on two facts. Distortion is a maximum over pairs of
pairs, so shrinking a correspondence never increases it. And every
correspondence contains one of the form ``graph(f) | graph(g)^T`` for maps
``f: X -> Y`` and ``g: Y -> X``. The optimum is therefore attained on such a
union, and it equals one of the finitely many values ``|w_X - w_Y|``. We
binary-search those values, deciding each threshold with a depth-first search
over ``f`` and ``g`` that keeps a bitmask of still-compatible pairs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .errors import PreconditionError
from .functors import Expr
from .networks import apply_hat
from .weights import ExtendedNetwork

DEFAULT_EXACT_CAP = 16


@dataclass(frozen=True)
class Correspondence:
    pairs: FrozenSet[Tuple[str, str]]

    def __init__(self, pairs: Iterable[Tuple[str, str]]):
        object.__setattr__(self, "pairs", frozenset((x, y) for x, y in pairs))

    def validate(self, x: ExtendedNetwork, y: ExtendedNetwork) -> None:
        for p, q in self.pairs:
            if p not in x.index or q not in y.index:
                raise PreconditionError(f"pair ({p}, {q}) is not in X x Y", "correspondence")
        if {p for p, _ in self.pairs} != set(x.points):
            raise PreconditionError("projection to X is not surjective", "correspondence")
        if {q for _, q in self.pairs} != set(y.points):
            raise PreconditionError("projection to Y is not surjective", "correspondence")

    def sorted_pairs(self) -> List[Tuple[str, str]]:
        return sorted(self.pairs)

    @classmethod
    def full(cls, x: ExtendedNetwork, y: ExtendedNetwork) -> "Correspondence":
        return cls((p, q) for p in x.points for q in y.points)


def _require_finite(*nets: ExtendedNetwork) -> None:
    for n in nets:
        if not n.is_finite():
            raise PreconditionError("network distance needs finite weights; got +inf", "network distance")


def distortion(r: Correspondence, x: ExtendedNetwork, y: ExtendedNetwork) -> Fraction:
    """Largest weight discrepancy over all pairs of pairs of ``r``."""
    _require_finite(x, y)
    r.validate(x, y)
    pairs = r.sorted_pairs()
    return max(abs(x.weight(a, a2) - y.weight(b, b2)) for a, b in pairs for a2, b2 in pairs)


@dataclass(frozen=True)
class DistanceResult:
    distance: Fraction
    witness: Correspondence
    mode: str  # "exact" or "upper bound"


def _feasible(x: ExtendedNetwork, y: ExtendedNetwork, eta: Fraction) -> Optional[List[Tuple[str, str]]]:
    nx, ny = len(x), len(y)
    wx, wy = x.weights, y.weights
    compat = [0] * (nx * ny)
    for i in range(nx):
        for j in range(ny):
            m = 0
            for i2 in range(nx):
                for j2 in range(ny):
                    if abs(wx[i][i2] - wy[j][j2]) <= eta and abs(wx[i2][i] - wy[j2][j]) <= eta:
                        m |= 1 << i2 * ny + j2
            compat[i * ny + j] = m
    # slots: first choose f(x_i), then g(y_j)
    slots = [[i * ny + j for j in range(ny)] for i in range(nx)]
    slots += [[i * ny + j for i in range(nx)] for j in range(ny)]
    chosen: List[int] = []

    def dfs(k: int, allowed: int) -> bool:
        if k == len(slots):
            return True
        for p in slots[k]:
            if not allowed >> p & 1:
                continue
            if p in chosen:
                if dfs(k + 1, allowed):
                    return True
                continue
            chosen.append(p)
            if dfs(k + 1, allowed & compat[p]):
                return True
            chosen.pop()
        return False

    full = (1 << (nx * ny)) - 1
    if not dfs(0, full & _self_ok(compat)):
        return None
    return sorted((x.points[p // ny], y.points[p % ny]) for p in set(chosen))


def _self_ok(compat: List[int]) -> int:
    return sum(1 << p for p, m in enumerate(compat) if m >> p & 1)


def network_distance_exact(x: ExtendedNetwork, y: ExtendedNetwork, cap: int = DEFAULT_EXACT_CAP) -> DistanceResult:
    """Half the least distortion over all correspondences, with an optimal witness."""
    _require_finite(x, y)
    if len(x) * len(y) > cap:
        raise PreconditionError(
            f"|X|*|Y| = {len(x) * len(y)} exceeds the exact cap {cap}; use network_distance_upper",
            "network distance (exact cap)")
    values = sorted({abs(a - b) for a in x.entries() for b in y.entries()})
    lo, hi = 0, len(values) - 1
    best = _feasible(x, y, values[hi])
    while lo < hi:
        mid = (lo + hi) // 2
        found = _feasible(x, y, values[mid])
        if found is None:
            lo = mid + 1
        else:
            hi, best = mid, found
    witness = Correspondence(best)
    return DistanceResult(distortion(witness, x, y) / 2, witness, "exact")


def network_distance_upper(x: ExtendedNetwork, y: ExtendedNetwork, restarts: int = 20,
                           seed: Optional[int] = 0) -> DistanceResult:
    """Upper bound by local search over ``graph(f) | graph(g)^T`` correspondences.

    Each restart draws random maps and reassigns single points while that lowers
    the distortion. The full correspondence is always a candidate, so the bound
    is finite.
    """
    _require_finite(x, y)
    rng = random.Random(seed)
    xs, ys = list(x.points), list(y.points)

    def build(f, g):
        return Correspondence([(p, f[p]) for p in xs] + [(g[q], q) for q in ys])

    best = Correspondence.full(x, y)
    best_d = distortion(best, x, y)
    for _ in range(restarts):
        f = {p: rng.choice(ys) for p in xs}
        g = {q: rng.choice(xs) for q in ys}
        cur = distortion(build(f, g), x, y)
        improved = True
        while improved:
            improved = False
            moves = [(f, p, c) for p in xs for c in ys] + [(g, q, c) for q in ys for c in xs]
            for table, key, val in moves:
                if table[key] == val:
                    continue
                old, table[key] = table[key], val
                d = distortion(build(f, g), x, y)
                if d < cur:
                    cur, improved = d, True
                else:
                    table[key] = old
        if cur < best_d:
            best, best_d = build(f, g), cur
    return DistanceResult(best_d / 2, best, "upper bound")


@dataclass(frozen=True)
class StabilityReport:
    lhs: Fraction
    rhs: Fraction
    holds: bool


def stability_check(f: Expr, x: ExtendedNetwork, y: ExtendedNetwork, cap: int = DEFAULT_EXACT_CAP) -> StabilityReport:
    """Compare the distance after applying ``f`` at every scale with the distance before."""
    fx, fy = apply_hat(f, x), apply_hat(f, y)
    if not (fx.is_finite() and fy.is_finite()):
        raise PreconditionError(
            f"{f} leaves some pair unjoined at every scale, so the outputs have +inf weights",
            "stability (functor other than the discrete one)")
    lhs = network_distance_exact(fx, fy, cap).distance
    rhs = network_distance_exact(x, y, cap).distance
    return StabilityReport(lhs, rhs, lhs <= rhs)
