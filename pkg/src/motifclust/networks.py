"""Sublevel filtrations of extended networks, the network-level functor induced
by a graph functor, ultranetwork checks and treegrams.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .functors import Expr, evaluate
from .graph import Graph
from .weights import INF, ExtendedNetwork, Weight, format_weight


def sublevel(x: ExtendedNetwork, eps: object) -> Graph:
    """Graph on the points born by ``eps`` with arrows of weight at most ``eps``."""
    born = [p for p in x.points if x.weight(p, p) <= eps]
    return Graph(born, [(p, q) for p in born for q in born if p != q and x.weight(p, q) <= eps])


def critical_values(x: ExtendedNetwork) -> List[Fraction]:
    """Distinct finite weights, ascending. Sublevels only change at these values."""
    return sorted({w for w in x.entries() if w is not INF})


def apply_hat(f: Expr, x: ExtendedNetwork) -> ExtendedNetwork:
    """Network whose weight from p to q is the least ``eps`` at which
    ``f(sublevel(x, eps))`` joins p to q (+inf if never).

    Sublevels are constant between critical values and nested along them, and a
    functor maps the inclusions to graph maps, so the arrow sets of
    ``f(sublevel)`` are nested too. Scanning the critical grid is therefore exact.
    The diagonal keeps the birth value.
    """
    n = len(x)
    out: List[List[Weight]] = [[INF] * n for _ in range(n)]
    for i, p in enumerate(x.points):
        out[i][i] = x.weight(p, p)
    pending = {(i, j) for i in range(n) for j in range(n) if i != j}
    for eps in critical_values(x):
        if not pending:
            break
        h = evaluate(f, sublevel(x, eps))
        for i, j in list(pending):
            p, q = x.points[i], x.points[j]
            if p in h and q in h and h.leq(p, q):
                out[i][j] = eps
                pending.discard((i, j))
    return ExtendedNetwork(x.points, out)


@dataclass(frozen=True)
class NetworkReport:
    is_symmetric: bool
    is_ultra: bool
    is_dissimilarity: bool
    asymmetric_pair: Optional[Tuple[str, str]] = None
    ultra_triple: Optional[Tuple[str, str, str]] = None


def validate(x: ExtendedNetwork) -> NetworkReport:
    """Exhaustive pair and triple checks.

    ``is_dissimilarity``: finite non-negative weights, zero exactly on the diagonal.
    """
    pts = x.points
    asym = next(((p, q) for p, q in itertools.combinations(pts, 2) if x.weight(p, q) != x.weight(q, p)), None)
    bad = next(((p, q, r) for p, q, r in itertools.product(pts, repeat=3)
                if x.weight(p, r) > max(x.weight(p, q), x.weight(q, r))), None)
    dis = all(
        w is not INF and w >= 0 and ((w == 0) == (p == q))
        for p in pts for q in pts for w in (x.weight(p, q),)
    )
    return NetworkReport(asym is None, bad is None, dis, asym, bad)


Block = Tuple[str, ...]


@dataclass(frozen=True)
class TreegramEvent:
    epsilon: Fraction
    partition: Tuple[Block, ...]


@dataclass(frozen=True)
class Treegram:
    """Births plus the sub-partition at every level where it changes.

    The partition of an event holds up to the next event; the last one holds
    forever, so blocks that never merge stay apart.
    """

    births: Dict[str, Fraction]
    events: Tuple[TreegramEvent, ...]

    def at(self, eps: object) -> Tuple[Block, ...]:
        current: Tuple[Block, ...] = ()
        for e in self.events:
            if e.epsilon <= eps:
                current = e.partition
            else:
                break
        return current

    def merge_level(self, p: str, q: str) -> Weight:
        if p == q:
            return self.births[p]
        for e in self.events:
            if any(p in b and q in b for b in e.partition):
                return e.epsilon
        return INF

    def to_network(self, points: Optional[Sequence[str]] = None) -> ExtendedNetwork:
        """The ultranetwork this treegram encodes."""
        pts = list(points) if points is not None else sorted(self.births)
        return ExtendedNetwork.from_function(pts, self.merge_level)


def _partition(u: ExtendedNetwork, eps: Fraction) -> Tuple[Block, ...]:
    born = [p for p in u.points if u.weight(p, p) <= eps]
    blocks: List[List[str]] = []
    for p in born:
        # u is an ultranetwork, so "within eps" is already an equivalence
        for b in blocks:
            if u.weight(b[0], p) <= eps:
                b.append(p)
                break
        else:
            blocks.append([p])
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def treegram(u: ExtendedNetwork) -> Treegram:
    """Treegram of a symmetric ultranetwork."""
    report = validate(u)
    if not report.is_symmetric:
        p, q = report.asymmetric_pair
        raise PreconditionError(f"weights of ({p}, {q}) and ({q}, {p}) differ", "treegram (symmetric ultranetwork)")
    if not report.is_ultra:
        p, q, r = report.ultra_triple
        raise PreconditionError(
            f"u({p},{r}) > max(u({p},{q}), u({q},{r}))", "treegram (strong triangle inequality)")
    events: List[TreegramEvent] = []
    for eps in critical_values(u):
        part = _partition(u, eps)
        if not events or events[-1].partition != part:
            events.append(TreegramEvent(eps, part))
    return Treegram({p: u.weight(p, p) for p in u.points}, tuple(events))


def _label(w: Weight) -> str:
    return str(format_weight(w))


def render_ascii(t: Treegram) -> str:
    """One row per point, one column per event; each cell names the point's block.

    Blocks are lettered by first appearance and a block that absorbs others takes
    the letter of its oldest member. ``.`` marks a point not yet born.
    """
    order = sorted(t.births, key=lambda p: (t.births[p], p))
    letters: Dict[str, str] = {}
    cols: List[Dict[str, str]] = []
    alphabet = iter(_letters())
    for e in t.events:
        col: Dict[str, str] = {}
        for block in e.partition:
            known = sorted((letters[p] for p in block if p in letters), key=lambda s: (len(s), s))
            tag = known[0] if known else next(alphabet)
            for p in block:
                letters[p] = tag
                col[p] = tag
        cols.append(col)
    heads = [_label(e.epsilon) for e in t.events]
    width = max([len(h) for h in heads] + [len(v) for v in letters.values()] + [1])
    pad = max([len(p) for p in order] + [3])
    lines = [" " * pad + " " + " ".join(h.rjust(width) for h in heads) + "  inf"]
    for p in order:
        cells = [c.get(p, ".").rjust(width) for c in cols]
        tail = cols[-1].get(p, ".") if cols else "."
        lines.append(p.ljust(pad) + " " + " ".join(cells) + "  " + tail)
    return "\n".join(lines) + "\n"


def _letters():
    for n in itertools.count(1):
        for combo in itertools.product("ABCDEFGHIJKLMNOPQRSTUVWXYZ", repeat=n):
            yield "".join(combo)


def render_dot(t: Treegram) -> str:
    """Graphviz digraph: leaves at birth levels, one node per merge, edges child -> parent."""
    lines = ["digraph treegram {", "  rankdir=LR;"]
    node_of: Dict[Block, str] = {}
    for p in sorted(t.births):
        node_of[(p,)] = f"leaf_{len(node_of)}"
        lines.append(f'  {node_of[(p,)]} [label="{p} ({_label(t.births[p])})", shape=box];')
    prev: Tuple[Block, ...] = ()
    merges = 0
    for e in t.events:
        for block in e.partition:
            if block in node_of:
                continue
            parts = [b for b in prev if set(b) <= set(block)]
            parts += [(p,) for p in block if not any(p in b for b in prev)]
            merges += 1
            name = f"merge_{merges}"
            node_of[block] = name
            lines.append(f'  {name} [label="{_label(e.epsilon)}", shape=point, xlabel="{_label(e.epsilon)}"];')
            for child in parts:
                lines.append(f"  {node_of[child]} -> {name};")
        prev = e.partition
    lines.append("}")
    return "\n".join(lines) + "\n"
