"""Corpus-wide checks of the structural statements about graph endofunctors.

Each check returns a list of :class:`Violation` records; an empty list means
the statement held on every graph tried. Equality of functors is only ever
decided on the corpus given.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .functors import Builtin, Expr, check_axiom, compare_on, evaluate, probe_two_vertex
from .graph import Graph, disjoint_union_maps, is_clustering, is_symmetric, is_transitive

Zoo = Mapping[str, Expr]


@dataclass(frozen=True)
class Violation:
    statement: str
    expression: str
    graph: Optional[Graph] = None
    detail: str = ""


def clustering_names(zoo: Zoo, corpus: Sequence[Graph]) -> List[str]:
    return [n for n, f in zoo.items() if all(is_clustering(evaluate(f, g)) for g in corpus)]


def symmetric_image(zoo: Zoo, corpus: Sequence[Graph]) -> List[Violation]:
    """Symmetric inputs give symmetric outputs."""
    bad = []
    for name, f in zoo.items():
        for g in corpus:
            if is_symmetric(g) and not is_symmetric(evaluate(f, g)):
                bad.append(Violation("symmetric image", name, g))
                break
    return bad


def additivity(exprs: Zoo, corpus: Sequence[Graph], max_total: int = 6) -> List[Violation]:
    """``F(G + H)`` is ``F(G) + F(H)`` for every pair with at most ``max_total`` vertices."""
    bad = []
    pairs = [(g, h) for g, h in itertools.product(corpus, repeat=2) if len(g) + len(h) <= max_total]
    for name, f in exprs.items():
        for g, h in pairs:
            joined, to_g, to_h = disjoint_union_maps(g, h)
            expected = {(to_g[u], to_g[v]) for u, v in evaluate(f, g).arrows}
            expected |= {(to_h[u], to_h[v]) for u, v in evaluate(f, h).arrows}
            if evaluate(f, joined).arrows != expected:
                bad.append(Violation("additivity", name, joined))
                break
    return bad


def order_sandwich(zoo: Zoo, corpus: Sequence[Graph]) -> List[Violation]:
    """``ls <= F <= conn`` for every expression not forced to disc or comp."""
    ls, conn = Builtin("ls"), Builtin("conn")
    bad = []
    for name, f in zoo.items():
        probe = probe_two_vertex(f)
        if probe.is_disc_forced or probe.is_comp_forced:
            continue
        if compare_on(ls, f, corpus).relation not in ("<=", "="):
            bad.append(Violation("ls <= F", name, compare_on(ls, f, corpus).le_counterexample))
        if compare_on(f, conn, corpus).relation not in ("<=", "="):
            bad.append(Violation("F <= conn", name, compare_on(f, conn, corpus).le_counterexample))
    return bad


def a1_equivalence(zoo: Zoo, corpus: Sequence[Graph]) -> List[Violation]:
    """For clustering expressions the two-vertex and the n-vertex value axioms agree."""
    bad = []
    for name in clustering_names(zoo, corpus):
        a1, a1p = check_axiom(zoo[name], "A1"), check_axiom(zoo[name], "A1prime")
        if a1 != a1p:
            bad.append(Violation("A1 iff A1prime", name, detail=f"A1={a1} A1prime={a1p}"))
    return bad


def clustering_sandwich(zoo: Zoo, corpus: Sequence[Graph]) -> List[Violation]:
    """``rec <= F <= nrec`` for clustering expressions satisfying A1."""
    rec, nrec = Builtin("rec"), Builtin("nrec")
    bad = []
    for name in clustering_names(zoo, corpus):
        f = zoo[name]
        if not check_axiom(f, "A1"):
            continue
        lo, hi = compare_on(rec, f, corpus), compare_on(f, nrec, corpus)
        if lo.relation not in ("<=", "="):
            bad.append(Violation("rec <= F", name, lo.le_counterexample))
        if hi.relation not in ("<=", "="):
            bad.append(Violation("F <= nrec", name, hi.le_counterexample))
    return bad


def tc_characterization(zoo: Zoo, corpus: Sequence[Graph]) -> List[Violation]:
    """tc satisfies A1'' and is transitive; every other such expression agrees with tc."""
    tc = Builtin("tc")
    bad = []
    if not check_axiom(tc, "A1doubleprime") or not all(is_transitive(evaluate(tc, g)) for g in corpus):
        bad.append(Violation("tc is transitive with A1doubleprime", "tc"))
    for name, f in zoo.items():
        if not check_axiom(f, "A1doubleprime"):
            continue
        if not all(is_transitive(evaluate(f, g)) for g in corpus):
            continue
        cmp = compare_on(f, tc, corpus)
        if cmp.relation != "=":
            bad.append(Violation("transitive with A1doubleprime implies tc", name,
                                 cmp.le_counterexample or cmp.ge_counterexample))
    return bad


def theorem_suite(zoo: Zoo, corpus: Sequence[Graph], additive: Iterable[str]) -> Dict[str, List[Violation]]:
    """Run every check; ``additive`` names the zoo entries tested for additivity."""
    additive_exprs = {n: zoo[n] for n in additive}
    return {
        "symmetric image": symmetric_image(zoo, corpus),
        "additivity": additivity(additive_exprs, corpus),
        "order sandwich": order_sandwich(zoo, corpus),
        "A1 iff A1prime": a1_equivalence(zoo, corpus),
        "clustering sandwich": clustering_sandwich(zoo, corpus),
        "tc characterization": tc_characterization(zoo, corpus),
    }
