"""Vertex-preserving endofunctors on reflexive graphs.

A functor is described by a small expression tree (:class:`Builtin`,
:class:`Power`, :class:`Semirec`, :class:`Motif`, :class:`PMotif`,
:class:`Compose`, :class:`Union`) and applied with :func:`evaluate`. Functor
equality is never decided globally; :func:`compare_on` works on an explicit
corpus and reports witnesses.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union as TUnion

from .errors import GraphError, PreconditionError
from .family import MotifFamily, dedup
from .graph import (
    RL, C, D, Graph, K, L, Partition, PointedGraph, T, Vertex, complete_on, is_clustering, is_symmetric,
    is_transitive, quotient, strongly_connected_components, weak_components,
)
from .homs import family_covers, pointed_hom_exists
from .weights import ExtendedNetwork

BUILTIN_NAMES = ("disc", "conn", "comp", "rev", "ls", "id", "us", "tc", "rec", "nrec", "uni")
_ALIASES = {"unilateral": "uni"}


@dataclass(frozen=True)
class Builtin:
    name: str

    def __post_init__(self) -> None:
        name = _ALIASES.get(self.name, self.name)
        if name not in BUILTIN_NAMES:
            raise GraphError(f"unknown builtin functor {self.name!r}")
        object.__setattr__(self, "name", name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Power:
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise GraphError("power exponent must be >= 1")

    def __str__(self) -> str:
        return f"power:{self.m}"


@dataclass(frozen=True)
class Semirec:
    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise GraphError("semi-reciprocal size must be >= 1")

    def __str__(self) -> str:
        return f"semirec:{self.t}"


@dataclass(frozen=True)
class Motif:
    family: MotifFamily

    def __post_init__(self) -> None:
        if self.family.pointed:
            raise GraphError("motif() takes an unpointed family; use PMotif for pointed ones")
        if not len(self.family):
            raise GraphError("motif family must be nonempty")

    def __str__(self) -> str:
        return f"motif:{self.family}"


@dataclass(frozen=True)
class PMotif:
    family: MotifFamily

    def __post_init__(self) -> None:
        if not self.family.pointed:
            raise GraphError("pmotif() takes a pointed family")
        if not len(self.family):
            raise GraphError("motif family must be nonempty")

    def __str__(self) -> str:
        return f"pmotif:{self.family}"


@dataclass(frozen=True)
class Compose:
    outer: "Expr"
    inner: "Expr"

    def __str__(self) -> str:
        # the parser nests composition to the right, so a composite outer needs parentheses
        return f"{_wrap(self.outer, (Union, Compose))}.{_wrap(self.inner, Union)}"


@dataclass(frozen=True)
class Union:
    left: "Expr"
    right: "Expr"

    def __str__(self) -> str:
        # and nests union to the left
        return f"{self.left}+{_wrap(self.right, Union)}"


Expr = TUnion[Builtin, Power, Semirec, Motif, PMotif, Compose, Union]


def _wrap(e: "Expr", kind) -> str:
    return f"({e})" if isinstance(e, kind) else str(e)


def compose(*exprs: Expr) -> Expr:
    """Right-to-left composite: ``compose(f, g, h)`` is f after g after h."""
    out = exprs[-1]
    for e in reversed(exprs[:-1]):
        out = Compose(e, out)
    return out


def union(*exprs: Expr) -> Expr:
    out = exprs[0]
    for e in exprs[1:]:
        out = Union(out, e)
    return out


# ---------------------------------------------------------------- relation helpers

def transitive_closure(g: Graph) -> Graph:
    """Reachability by repeated squaring of the reflexive adjacency bitmasks."""
    reach = list(g.out_masks)
    while True:
        nxt = [_or_rows(reach, row) for row in reach]
        if nxt == reach:
            break
        reach = nxt
    return _from_masks(g, reach)


def relation_power(g: Graph, m: int) -> Graph:
    """Pairs joined by a directed walk of at most ``m`` steps (loops pad shorter walks)."""
    base = g.out_masks
    reach = list(base)
    for _ in range(m - 1):
        nxt = [_or_rows(base, row) for row in reach]
        if nxt == reach:
            break
        reach = nxt
    return _from_masks(g, reach)


def _or_rows(rows: Sequence[int], mask: int) -> int:
    acc = 0
    while mask:
        low = mask & -mask
        acc |= rows[low.bit_length() - 1]
        mask ^= low
    return acc


def _from_masks(g: Graph, rows: Sequence[int]) -> Graph:
    vs = g.vertices
    arrows = []
    for i, row in enumerate(rows):
        j = 0
        while row:
            if row & 1 and i != j:
                arrows.append((vs[i], vs[j]))
            row >>= 1
            j += 1
    return Graph(vs, arrows)


def _blocks_complete(g: Graph, blocks: Iterable[Sequence[Vertex]]) -> Graph:
    return Graph(g.vertices, [(u, v) for b in blocks for u in b for v in b])


@lru_cache(maxsize=4096)
def pointed_classes(g: Graph) -> Tuple[PointedGraph, ...]:
    """All markings of ``g``, one per pointed-isomorphism class."""
    return dedup(PointedGraph(g, z, zhat) for z in g.vertices for zhat in g.vertices)


# ---------------------------------------------------------------- evaluation

def evaluate(expr: Expr, g: Graph) -> Graph:
    """Apply ``expr`` to ``g``. The vertex set is always preserved."""
    if isinstance(expr, Builtin):
        return _BUILTINS[expr.name](g)
    if isinstance(expr, Power):
        return relation_power(g, expr.m)
    if isinstance(expr, Semirec):
        return transitive_closure(_ls(relation_power(g, expr.t)))
    if isinstance(expr, Motif):
        return _eval_motif(expr.family, g)
    if isinstance(expr, PMotif):
        return _eval_pmotif(expr.family, g)
    if isinstance(expr, Compose):
        return evaluate(expr.outer, evaluate(expr.inner, g))
    if isinstance(expr, Union):
        a, b = evaluate(expr.left, g), evaluate(expr.right, g)
        return Graph(g.vertices, a.arrows | b.arrows)
    raise TypeError(f"not a functor expression: {expr!r}")


def _ls(g: Graph) -> Graph:
    return Graph(g.vertices, [(u, v) for u, v in g.arrows if (v, u) in g.arrows])


def _us(g: Graph) -> Graph:
    return Graph(g.vertices, list(g.arrows) + [(v, u) for u, v in g.arrows])


_BUILTINS = {
    "disc": lambda g: Graph(g.vertices),
    "comp": complete_on,
    "id": lambda g: g,
    "rev": lambda g: g.reversed(),
    "ls": _ls,
    "us": _us,
    "tc": transitive_closure,
    "conn": lambda g: _blocks_complete(g, weak_components(g)),
    "rec": lambda g: transitive_closure(_ls(g)),
    "nrec": lambda g: _blocks_complete(g, strongly_connected_components(g)),
    "uni": lambda g: transitive_closure(_us(g)),
}


def _eval_pmotif(family: MotifFamily, g: Graph) -> Graph:
    arrows = []
    for v, v2 in itertools.permutations(g.vertices, 2):
        if any(pointed_hom_exists(p, g, v, v2) for p in family.elements):
            arrows.append((v, v2))
    return Graph(g.vertices, arrows)


def _eval_motif(family: MotifFamily, g: Graph) -> Graph:
    # output is symmetric, so unordered pairs suffice; markings are tried per class
    marked = [p for w in family.elements for p in pointed_classes(w) if p.z != p.zhat]
    arrows = []
    for v, v2 in itertools.combinations(g.vertices, 2):
        if any(pointed_hom_exists(p, g, v, v2) for p in marked):
            arrows += [(v, v2), (v2, v)]
    return Graph(g.vertices, arrows)


# ---------------------------------------------------------------- analyses

@dataclass(frozen=True)
class Comparison:
    relation: str  # one of "<=", ">=", "=", "incomparable"
    le_counterexample: Optional[Graph] = None  # graph where F1(G) is not inside F2(G)
    ge_counterexample: Optional[Graph] = None


def compare_on(f1: Expr, f2: Expr, corpus: Iterable[Graph]) -> Comparison:
    """Arrow-set inclusion of two functors across a finite corpus."""
    le_bad = ge_bad = None
    for g in corpus:
        a, b = evaluate(f1, g).arrows, evaluate(f2, g).arrows
        if le_bad is None and not a <= b:
            le_bad = g
        if ge_bad is None and not b <= a:
            ge_bad = g
        if le_bad is not None and ge_bad is not None:
            break
    if le_bad is None and ge_bad is None:
        rel = "="
    elif le_bad is None:
        rel = "<="
    elif ge_bad is None:
        rel = ">="
    else:
        rel = "incomparable"
    return Comparison(rel, le_bad, ge_bad)


@dataclass(frozen=True)
class Probe:
    on_d2: Graph
    on_l2: Graph
    on_k2: Graph

    @property
    def is_comp_forced(self) -> bool:
        return self.on_d2 != D(2)

    @property
    def is_disc_forced(self) -> bool:
        return self.on_k2 != K(2)

    @property
    def arrow_increasing(self) -> bool:
        return self.on_l2 in (L(2), K(2))


def probe_two_vertex(f: Expr) -> Probe:
    """Evaluate on the three two-vertex graphs; these decide several global traits."""
    return Probe(evaluate(f, D(2)), evaluate(f, L(2)), evaluate(f, K(2)))


AXIOMS = ("A1", "A1prime", "A1doubleprime")


def check_axiom(f: Expr, which: str, n: int = 6) -> bool:
    """Axioms of value.

    ``A1``: L2 -> D2 and K2 -> K2. ``A1prime``: T_k -> D_k and K_k -> K_k for
    every k in 2..n. ``A1doubleprime``: D2 -> D2 and L2 -> L2.
    """
    if which == "A1":
        return evaluate(f, L(2)) == D(2) and evaluate(f, K(2)) == K(2)
    if which == "A1prime":
        return all(evaluate(f, T(k)) == D(k) and evaluate(f, K(k)) == K(k) for k in range(2, n + 1))
    if which == "A1doubleprime":
        return evaluate(f, D(2)) == D(2) and evaluate(f, L(2)) == L(2)
    raise GraphError(f"unknown axiom {which!r}; choose from {AXIOMS}")


def a1_partition_failures(family: MotifFamily) -> List[Tuple[Graph, Partition]]:
    """Two-block partitions of motifs whose quotient is not the complete 2-graph.

    For an unpointed family without the one-vertex motif, the family's functor
    satisfies A1 exactly when this list is empty.
    """
    if family.pointed:
        raise GraphError("the partition criterion applies to unpointed families")
    if any(len(w) == 1 for w in family.elements):
        raise PreconditionError("family contains the one-vertex motif", "A1 partition criterion")
    failures = []
    for w in family.elements:
        first, rest = w.vertices[0], w.vertices[1:]
        for r in range(len(rest)):
            for extra in itertools.combinations(rest, r):
                a = {first, *extra}
                b = set(w.vertices) - a
                p = Partition([a, b])
                if len(quotient(w, p).arrows) != 2:
                    failures.append((w, p))
    return failures


def is_completion(f: Expr, omega: Graph) -> bool:
    return evaluate(f, omega) == complete_on(omega)


def is_clustering_on(f: Expr, corpus: Iterable[Graph]) -> bool:
    return all(is_clustering(evaluate(f, g)) for g in corpus)


def is_symmetric_on(f: Expr, corpus: Iterable[Graph]) -> bool:
    return all(is_symmetric(evaluate(f, g)) for g in corpus)


def is_transitive_on(f: Expr, corpus: Iterable[Graph]) -> bool:
    return all(is_transitive(evaluate(f, g)) for g in corpus)


# ---------------------------------------------------------------- motif generators

def cycles_upto(n: int) -> MotifFamily:
    return MotifFamily.of([C(k) for k in range(2, max(n, 2) + 1)], name=f"cycles<={n}")


def reciprocal_lines_upto(n: int) -> MotifFamily:
    return MotifFamily.of([RL(k) for k in range(1, max(n, 1) + 1)], name=f"rlines<={n}")


def zigzags_upto(n: int) -> MotifFamily:
    """All orientations of a path on k <= n vertices (exactly one arrow per step)."""
    graphs = []
    for k in range(1, n + 1):
        vs = [f"x{i}" for i in range(1, k + 1)]
        for bits in itertools.product((0, 1), repeat=k - 1):
            arrows = [(vs[i], vs[i + 1]) if b else (vs[i + 1], vs[i]) for i, b in enumerate(bits)]
            graphs.append(Graph(vs, arrows))
    return MotifFamily.of(graphs, name=f"zigzag<={n}")


# ---------------------------------------------------------------- graph hierarchy

def hierarchy_functors(families: Sequence[MotifFamily]) -> List[Expr]:
    """The nested clustering functors: disc, tc after each family's functor, comp."""
    return [Builtin("disc")] + [Compose(Builtin("tc"), Motif(f)) for f in families] + [Builtin("comp")]


def graph_hierarchy(g: Graph, families: Sequence[MotifFamily]) -> ExtendedNetwork:
    """Ultranetwork on ``g``'s vertices: the first level at which two vertices merge.

    Levels are 0 (discrete), 1..n (transitive closure of each family's functor)
    and n+1 (complete). Consecutive families must satisfy the covering chain;
    a violation raises :class:`PreconditionError` naming the offending pair.
    """
    for i in range(len(families) - 1):
        report = family_covers(families[i], families[i + 1])
        if not report.holds:
            raise PreconditionError(
                f"family {i + 1} is not covered by family {i + 2} (uncovered: {report.uncovered!r})",
                "covering chain of nested families",
            )
    levels = [evaluate(f, g) for f in hierarchy_functors(families)]

    def level(v: Vertex, v2: Vertex) -> int:
        if v == v2:
            return 0
        return next(i for i, h in enumerate(levels) if h.leq(v, v2))

    return ExtendedNetwork.from_function(g.vertices, level)
