"""The twelve acceptance criteria, each with its time budget."""
import random
import time
from fractions import Fraction

import pytest

from motifclust.corpus import corpus, random_graph, random_pointed
from motifclust.distance import stability_check
from motifclust.expr import parse_expr
from motifclust.family import MotifFamily
from motifclust.fixtures import (cycle_families, expression_zoo, grafting_network, hierarchy_graph,
                                 treegram_network)
from motifclust.functors import (BUILTIN_NAMES, Builtin, Compose, Motif, PMotif, cycles_upto, evaluate,
                                 graph_hierarchy, reciprocal_lines_upto)
from motifclust.graph import C, D, Graph, K, L, PointedGraph, are_isomorphic, are_isomorphic_pointed
from motifclust.homs import family_covers
from motifclust.motifs import omega_star_of, pointed_compose
from motifclust.networks import apply_hat, sublevel, treegram
from motifclust.theorems import theorem_suite
from motifclust.weights import INF, ExtendedNetwork
from oracles import brute_motif_arrows, brute_scc_pairs, brute_tc

A4 = ("a1", "a2", "a3", "a4")


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def both(*pairs):
    return {a for u, v in pairs for a in ((u, v), (v, u))}


@pytest.mark.acceptance(1)
def test_square_then_ls_on_square_cycle():
    """ls.power:2 on C4 joins exactly the two diagonals"""
    with Budget(1):
        out = evaluate(parse_expr("ls.power:2"), C(4))
    assert out.vertices == A4 and out.arrows == both(("a1", "a3"), ("a2", "a4"))


@pytest.mark.acceptance(2)
def test_union_on_line():
    """us+tc on L3"""
    with Budget(1):
        out = evaluate(parse_expr("us+tc"), L(3))
    assert out.arrows == both(("a1", "a2"), ("a2", "a3")) | {("a1", "a3")}


@pytest.mark.acceptance(3)
def test_pointed_composition_example():
    """K2 composed with L3 gives the pointed 4-cycle"""
    outer = MotifFamily.of([PointedGraph(K(2), "a1", "a2")], pointed=True)
    inner = MotifFamily.of([PointedGraph(L(3), "a1", "a3")], pointed=True)
    with Budget(1):
        fam = pointed_compose(outer, inner)
    assert len(fam) == 1
    assert are_isomorphic_pointed(fam.elements[0], PointedGraph(C(4), "a1", "a3"))


@pytest.mark.acceptance(4)
def test_treegram_events():
    """treegram of the staggered-birth ultranetwork"""
    t = treegram(treegram_network())
    assert [t.births[p] for p in ("x1", "x2", "x3", "x4")] == [0, 1, 2, 0]
    assert [(e.epsilon, e.partition) for e in t.events] == [
        (0, (("x1",), ("x4",))),
        (1, (("x1",), ("x2",), ("x4",))),
        (2, (("x1",), ("x2",), ("x3",), ("x4",))),
        (3, (("x1", "x2"), ("x3",), ("x4",))),
        (4, (("x1", "x2", "x3"), ("x4",))),
    ]
    assert t.merge_level("x1", "x4") is INF and t.merge_level("x3", "x4") is INF


@pytest.mark.acceptance(5)
def test_grafting_network():
    """sublevels D3/C3/K3 and the induced nrec and rec networks"""
    x = grafting_network()
    assert are_isomorphic(sublevel(x, 1), D(3))
    assert are_isomorphic(sublevel(x, 2), C(3))
    assert are_isomorphic(sublevel(x, 4), K(3))
    for name, level in (("nrec", 2), ("rec", 4)):
        out = apply_hat(Builtin(name), x)
        assert all(out.weight(p, q) == (0 if p == q else level) for p in x.points for q in x.points)


@pytest.mark.acceptance(6)
def test_composition_theorem_random():
    """100 random composition instances"""
    rng = random.Random(6)
    with Budget(120):
        for _ in range(100):
            fams = [MotifFamily.of([random_pointed(3, 2, rng) for _ in range(rng.randint(1, 2))], pointed=True)
                    for _ in range(2)]
            inner, outer = fams
            g = random_graph(rng.randint(1, 5), rng.random(), rng)
            step = evaluate(PMotif(outer), evaluate(PMotif(inner), g))
            assert step == evaluate(PMotif(pointed_compose(outer, inner)), g), (outer, inner, g)


@pytest.mark.acceptance(7)
def test_covering_theorem_random():
    """100 random covering instances, decided two ways"""
    rng = random.Random(7)
    outcomes = set()
    for _ in range(100):
        f1, f2 = (MotifFamily.of([random_pointed(3, 2, rng) for _ in range(rng.randint(1, 3))], pointed=True)
                  for _ in range(2))
        direct = family_covers(f1, f2).holds
        via_functor = all(evaluate(PMotif(f2), p.graph).leq(p.z, p.zhat) for p in f1.elements)
        assert direct == via_functor, (f1, f2)
        outcomes.add(direct)
    assert outcomes == {True, False}


def _oracle_graphs():
    rng = random.Random(8)
    return corpus(4) + [random_graph(5, rng.uniform(0.15, 0.6), rng) for _ in range(200)]


@pytest.mark.acceptance(8)
def test_oracle_equivalences():
    """nrec and rec against capped cycle and reciprocal-line motifs"""
    for g in _oracle_graphs():
        n = len(g)
        nrec = evaluate(Builtin("nrec"), g)
        assert nrec.arrows == evaluate(Compose(Builtin("tc"), Motif(cycles_upto(2 * n))), g).arrows, g
        assert nrec.arrows == brute_scc_pairs(g)
        rec = evaluate(Builtin("rec"), g)
        assert rec.arrows == evaluate(Motif(reciprocal_lines_upto(n)), g).arrows, g


@pytest.mark.acceptance(9)
def test_theorem_suite():
    """theorem suite on every graph with at most 4 vertices"""
    with Budget(180):
        report = theorem_suite(expression_zoo(), corpus(4), [n for n in BUILTIN_NAMES if n != "comp"])
    assert {k: v for k, v in report.items() if v} == {}


def _random_network(rng, prefix):
    n = rng.randint(1, 4)
    pts = [f"{prefix}{i}" for i in range(n)]
    return ExtendedNetwork(pts, [[rng.randint(0, 9) for _ in pts] for _ in pts])


@pytest.mark.acceptance(10)
def test_stability_random():
    """stability of rec, nrec, tc.us and tc on 200 random network pairs"""
    rng = random.Random(10)
    functors = [parse_expr(t) for t in ("rec", "nrec", "tc.us", "tc")]
    with Budget(180):
        for _ in range(200):
            x, y = _random_network(rng, "x"), _random_network(rng, "y")
            for f in functors:
                r = stability_check(f, x, y)
                assert r.holds, (str(f), x, y, r)


@pytest.mark.acceptance(11)
def test_bounded_pointed_representability():
    """pointed motifs extracted on 3 vertices reproduce tc, ls, us and rev"""
    graphs = corpus(3)
    for name in ("tc", "ls", "us", "rev"):
        fam = omega_star_of(Builtin(name), 3)
        for g in graphs:
            assert evaluate(PMotif(fam), g) == evaluate(Builtin(name), g), (name, g)


def _hierarchy_oracle(g: Graph, families):
    levels = [brute_tc(Graph(g.vertices, brute_motif_arrows(f, g))) for f in families]

    def level(v, w):
        return next((i + 1 for i, arrows in enumerate(levels) if (v, w) in arrows), len(families) + 1)
    return level


@pytest.mark.acceptance(12)
def test_graph_hierarchy():
    """nested cycle families on the four-vertex example"""
    g, fams = hierarchy_graph(), cycle_families(4)
    u = graph_hierarchy(g, fams)
    assert u.weight("a", "b") == 1 and u.weight("a", "c") == 2 and u.weight("b", "c") == 2
    oracle = _hierarchy_oracle(g, fams)
    for v in "abc":
        assert u.weight(v, "d") == u.weight("d", v) == oracle(v, "d") == 5
    assert all(u.weight(v, v) == 0 for v in g.vertices)
    assert u.weight("a", "d") == Fraction(5)
