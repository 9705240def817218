import pytest
from hypothesis import given, settings, strategies as st

from motifclust.corpus import corpus
from motifclust.errors import GraphError, PreconditionError
from motifclust.expr import parse_expr
from motifclust.family import MotifFamily
from motifclust.fixtures import cycle_families, hierarchy_graph
from motifclust.functors import (Builtin, Compose, Motif, PMotif, Power, Union, a1_partition_failures,
                                 check_axiom, compare_on, compose, cycles_upto, evaluate, graph_hierarchy,
                                 is_completion, probe_two_vertex, reciprocal_lines_upto, union, zigzags_upto)
from motifclust.graph import C, D, K, L, T, Graph, PointedGraph, is_graph_map
from motifclust.networks import validate
from oracles import (brute_motif_arrows, brute_pmotif_arrows, brute_power, brute_scc_pairs, brute_tc,
                     brute_weak_pairs)
from strategies import graphs, pointed_families, unpointed_families


def ev(text, g):
    return evaluate(parse_expr(text), g)


def both_ways(*pairs):
    return frozenset(pairs) | frozenset((v, u) for u, v in pairs)


class TestLeaves:
    @given(graphs(max_n=6))
    def test_builtins_against_definitions(self, g):
        everything = {(u, v) for u in g.vertices for v in g.vertices if u != v}
        rev = {(v, u) for u, v in g.arrows}
        assert ev("disc", g).arrows == set()
        assert ev("comp", g).arrows == everything
        assert ev("id", g) == g
        assert ev("rev", g).arrows == rev
        assert ev("ls", g).arrows == g.arrows & rev
        assert ev("us", g).arrows == g.arrows | rev
        assert ev("tc", g).arrows == brute_tc(g)
        assert ev("conn", g).arrows == brute_weak_pairs(g)
        assert ev("nrec", g).arrows == brute_scc_pairs(g)
        assert ev("rec", g).arrows == brute_tc(Graph(g.vertices, g.arrows & rev))
        assert ev("uni", g).arrows == ev("unilateral", g).arrows == brute_tc(Graph(g.vertices, g.arrows | rev))

    @given(graphs(max_n=6), st.integers(1, 5))
    def test_power(self, g, m):
        assert evaluate(Power(m), g).arrows == brute_power(g, m)

    @given(graphs(max_n=5), st.integers(1, 3))
    def test_semirec(self, g, t):
        expected = ev("tc.ls", Graph(g.vertices, brute_power(g, t)))
        assert ev(f"semirec:{t}", g) == expected

    @settings(max_examples=60)
    @given(unpointed_families(max_n=3), graphs(max_n=4))
    def test_motif_against_enumeration(self, fam, g):
        assert evaluate(Motif(fam), g).arrows == brute_motif_arrows(fam, g)

    @settings(max_examples=60)
    @given(pointed_families(), graphs(max_n=4))
    def test_pmotif_against_enumeration(self, fam, g):
        assert evaluate(PMotif(fam), g).arrows == brute_pmotif_arrows(fam, g)

    @given(graphs(max_n=5))
    def test_vertex_set_preserved(self, g):
        for text in ("disc", "comp", "tc.us", "ls.power:2", "us+tc"):
            assert ev(text, g).vertices == g.vertices


class TestExamples:
    def test_union_on_line(self):
        assert ev("us+tc", L(3)).arrows == both_ways(("a1", "a2"), ("a2", "a3")) | {("a1", "a3")}
        assert ev("us+tc", L(2)) == K(2)

    def test_ls_after_square_on_cycle(self):
        assert ev("ls.power:2", C(4)).arrows == both_ways(("a1", "a3"), ("a2", "a4"))

    def test_pointed_triangle_is_not_symmetric(self):
        # marks along an arrow of the triangle reproduce it; marks against an arrow reverse it
        along = PMotif(MotifFamily.of([PointedGraph(C(3), "a2", "a3")]))
        against = PMotif(MotifFamily.of([PointedGraph(C(3), "a2", "a1")]))
        assert check_axiom(along, "A1") and check_axiom(against, "A1")
        assert evaluate(along, C(3)) == C(3)
        assert evaluate(against, C(3)) == ev("rev", C(3))

    def test_nrec_triangle(self):
        assert ev("nrec", C(3)) == K(3)

    def test_composition_order(self):
        # tc.ls is tc after ls: on C3 ls is discrete, so the result is discrete
        assert ev("tc.ls", C(3)) == D(3).relabel({})
        assert ev("ls.tc", C(3)) == K(3)

    def test_helpers(self):
        assert compose(Builtin("tc"), Builtin("ls")) == parse_expr("tc.ls")
        assert union(Builtin("us"), Builtin("tc")) == parse_expr("us+tc")
        assert str(Compose(Builtin("tc"), Union(Builtin("ls"), Builtin("rev")))) == "tc.(ls+rev)"

    def test_invalid_params(self):
        with pytest.raises(GraphError):
            Power(0)
        with pytest.raises(GraphError):
            Motif(MotifFamily.empty(False))


class TestCompare:
    def test_ls_below_us(self):
        assert compare_on(Builtin("ls"), Builtin("us"), corpus(3)).relation == "<="

    def test_id_below_tc(self):
        assert compare_on(Builtin("id"), Builtin("tc"), corpus(3)).relation == "<="

    def test_rev_id_incomparable(self):
        c = compare_on(Builtin("rev"), Builtin("id"), [L(2)])
        assert c.relation == "incomparable" and c.le_counterexample == L(2) == c.ge_counterexample

    def test_equal(self):
        assert compare_on(parse_expr("tc.us"), Builtin("uni"), corpus(3)).relation == "="


class TestProbes:
    def test_tc(self):
        p = probe_two_vertex(Builtin("tc"))
        assert (p.on_d2, p.on_l2, p.on_k2) == (D(2), L(2), K(2)) and p.arrow_increasing

    def test_discrete_pair_motif(self):
        p = probe_two_vertex(Motif(MotifFamily.of([D(2)])))
        assert (p.on_d2, p.on_l2, p.on_k2) == (K(2), K(2), K(2)) and p.is_comp_forced

    def test_ls(self):
        p = probe_two_vertex(Builtin("ls"))
        assert (p.on_d2, p.on_l2, p.on_k2) == (D(2), D(2), K(2)) and not p.arrow_increasing


class TestAxioms:
    @pytest.mark.parametrize("name,expected", [("ls", True), ("tc", False), ("us", False), ("rec", True),
                                               ("nrec", True), ("uni", False), ("disc", False)])
    def test_a1(self, name, expected):
        assert check_axiom(Builtin(name), "A1") is expected

    def test_a1_prime(self):
        assert check_axiom(Builtin("rec"), "A1prime")
        assert not check_axiom(Builtin("tc"), "A1prime")

    def test_a1_doubleprime(self):
        assert check_axiom(Builtin("tc"), "A1doubleprime")
        assert not check_axiom(Builtin("ls"), "A1doubleprime")

    def test_unknown(self):
        with pytest.raises(GraphError):
            check_axiom(Builtin("tc"), "A2")

    def test_partition_criterion_cycles(self):
        assert a1_partition_failures(cycles_upto(4)) == []

    def test_partition_criterion_line(self):
        fails = a1_partition_failures(MotifFamily.of([L(3)]))
        assert fails and all(w == L(3) for w, _ in fails)

    def test_partition_criterion_needs_no_point(self):
        with pytest.raises(PreconditionError):
            a1_partition_failures(MotifFamily.of([D(1), K(2)]))

    @settings(max_examples=40)
    @given(unpointed_families(max_n=3))
    def test_partition_criterion_matches_a1(self, fam):
        if any(len(w) == 1 for w in fam.elements):
            return
        assert (a1_partition_failures(fam) == []) == check_axiom(Motif(fam), "A1")


class TestCompletions:
    def test_point_is_always_a_completion(self):
        for name in ("disc", "ls", "tc"):
            assert is_completion(Builtin(name), D(1))

    def test_ls(self):
        assert is_completion(Builtin("ls"), K(2))
        assert not is_completion(Builtin("ls"), L(2))

    def test_completion_bound(self):
        small = corpus(3)
        for text in ("tc", "nrec", "power:2", "us+tc", "ls.power:2"):
            f = parse_expr(text)
            comps = [w for w in small if is_completion(f, w)]
            fa = Motif(MotifFamily.of(comps))
            for g in corpus(4):
                assert evaluate(fa, g).arrows <= ev("ls", evaluate(f, g)).arrows <= evaluate(f, g).arrows


class TestGenerators:
    def test_cycles(self):
        assert [len(w) for w in cycles_upto(4)] == [2, 3, 4]

    def test_reciprocal_lines(self):
        assert [len(w) for w in reciprocal_lines_upto(3)] == [1, 2, 3]

    @settings(max_examples=50)
    @given(graphs(max_n=5))
    def test_zigzags_give_conn(self, g):
        assert evaluate(Motif(zigzags_upto(len(g))), g) == ev("conn", g)


class TestHierarchy:
    def test_levels(self):
        u = graph_hierarchy(hierarchy_graph(), cycle_families())
        assert u.weight("a", "b") == 1
        assert u.weight("a", "c") == u.weight("b", "c") == 2
        assert all(u.weight(v, "d") == 5 for v in "abc")
        report = validate(u)
        assert report.is_symmetric and report.is_ultra

    def test_d_is_on_no_cycle(self):
        # direct oracle: d joins no cycle, so no tc.motif{C_k} ever reaches it
        g = hierarchy_graph()
        for fam in cycle_families():
            assert ("c", "d") not in brute_tc(Graph(g.vertices, brute_motif_arrows(fam, g)))

    def test_complete_merges_first(self):
        u = graph_hierarchy(K(3), cycle_families(2))
        assert all(u.weight(a, b) == 1 for a in K(3).vertices for b in K(3).vertices if a != b)

    def test_chain_violation(self):
        with pytest.raises(PreconditionError):
            graph_hierarchy(K(3), [MotifFamily.of([C(3)]), MotifFamily.of([C(2)])])


class TestFunctoriality:
    @settings(max_examples=60)
    @given(graphs(max_n=4), graphs(max_n=4, prefix="u"), st.data())
    def test_maps_stay_maps(self, g, h, data):
        phi = {v: data.draw(st.sampled_from(h.vertices)) for v in g.vertices}
        if not is_graph_map(phi, g, h):
            return
        for text in ("disc", "conn", "comp", "rev", "ls", "us", "tc", "rec", "nrec", "uni",
                     "power:2", "semirec:2"):
            assert is_graph_map(phi, ev(text, g), ev(text, h)), text
        for fam in (cycles_upto(3), MotifFamily.of([L(3)])):
            assert is_graph_map(phi, evaluate(Motif(fam), g), evaluate(Motif(fam), h))

    def test_complete_stays_complete(self):
        for name in ("conn", "comp", "rev", "ls", "id", "us", "tc", "rec", "nrec", "uni"):
            for n in range(1, 7):
                assert ev(name, K(n)) == K(n)

    def test_transitive_lines(self):
        assert ev("rec", T(4)) == D(4)
