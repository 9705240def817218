"""Small worked examples used by tests, scripts and the CLI docs."""
from __future__ import annotations

from typing import Dict, List

from .expr import parse_expr
from .family import MotifFamily
from .functors import BUILTIN_NAMES, Builtin, Compose, Expr, Motif, PMotif, cycles_upto, reciprocal_lines_upto
from .graph import C, D, Graph, K, L, PointedGraph
from .weights import INF, ExtendedNetwork

X3 = ("x1", "x2", "x3")


def grafting_network() -> ExtendedNetwork:
    """Asymmetric 3-point dissimilarity network: D3 below 2, C3 on [2, 4), K3 from 4."""
    return ExtendedNetwork(X3, [[0, 2, 4], [4, 0, 2], [2, 4, 0]])


def halved_grafting_network() -> ExtendedNetwork:
    return grafting_network().mapped(lambda w: w / 2)


def treegram_network() -> ExtendedNetwork:
    """Symmetric ultranetwork with staggered births and a branch that never merges."""
    return ExtendedNetwork(
        ("x1", "x2", "x3", "x4"),
        [[0, 3, 4, INF], [3, 1, 4, INF], [4, 4, 2, INF], [INF, INF, INF, 0]],
    )


def hierarchy_graph() -> Graph:
    """a <-> b, b -> c, c -> a, c -> d: one 2-cycle, one 3-cycle, and a tail to d."""
    return Graph("abcd", [("a", "b"), ("b", "a"), ("b", "c"), ("c", "a"), ("c", "d")])


def cycle_families(n: int = 4) -> List[MotifFamily]:
    """Singleton families {C2}, {C3}, ..., {C_{n+1}}."""
    return [MotifFamily.of([C(k + 1)], name=f"C{k + 1}") for k in range(1, n + 1)]


def _motif(*graphs: Graph) -> Motif:
    return Motif(MotifFamily.of(graphs))


def _pmotif(*marked) -> PMotif:
    return PMotif(MotifFamily.of([PointedGraph(*m) for m in marked]))


def expression_zoo() -> Dict[str, Expr]:
    """A fixed menagerie of functor expressions for corpus-wide checks."""
    out: Dict[str, Expr] = {name: Builtin(name) for name in BUILTIN_NAMES}
    for text in ["power:2", "power:3", "semirec:1", "semirec:2", "ls.power:2", "us+tc", "tc.us",
                 "rev.tc", "ls+rev", "tc.(ls+rev)", "ls.tc", "us.ls", "conn.ls", "nrec.ls", "tc.power:2"]:
        out[text] = parse_expr(text)
    tc = Builtin("tc")
    out["motif{K2}"] = _motif(K(2))
    out["motif{L2}"] = _motif(L(2))
    out["motif{D2}"] = _motif(D(2))
    out["motif{C3}"] = _motif(C(3))
    out["tc.motif{C3}"] = Compose(tc, _motif(C(3)))
    out["tc.motif{C2,C3}"] = Compose(tc, Motif(cycles_upto(3)))
    out["tc.motif{RL<=3}"] = Compose(tc, Motif(reciprocal_lines_upto(3)))
    out["tc.motif{C4}"] = Compose(tc, _motif(C(4)))
    out["pmotif{(C3,a2,a3)}"] = _pmotif((C(3), "a2", "a3"))
    out["pmotif{(L3,a1,a3)}"] = _pmotif((L(3), "a1", "a3"))
    out["pmotif{(L2,a2,a1)}"] = _pmotif((L(2), "a2", "a1"))
    out["pmotif{(D1,a1,a1)}"] = _pmotif((D(1), "a1", "a1"))
    out["tc.pmotif{(K2,a1,a2),(L3,a1,a3)}"] = Compose(tc, _pmotif((K(2), "a1", "a2"), (L(3), "a1", "a3")))
    return out
