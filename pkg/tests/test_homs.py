import pytest
from hypothesis import given, strategies as st

from motifclust.errors import GraphError
from motifclust.family import MotifFamily
from motifclust.fixtures import hierarchy_graph
from motifclust.functors import Builtin, evaluate
from motifclust.graph import C, D, K, L, PointedGraph, is_graph_map
from motifclust.homs import (covers_pointed, family_covers, find_hom, find_pointed_hom, hom_exists_hitting,
                             pointed_hom_exists)
from oracles import brute_hitting, brute_pointed_hom
from strategies import graphs, pointed_graphs


def P(g, z, zhat):
    return PointedGraph(g, z, zhat)


class TestPointed:
    def test_arrow_into_complete(self):
        assert pointed_hom_exists(P(L(2), "a1", "a2"), K(2), "a1", "a2")

    def test_reciprocal_into_arrow(self):
        assert not pointed_hom_exists(P(K(2), "a1", "a2"), L(2), "a1", "a2")

    def test_five_cycle_closed_walk(self):
        # closed walk a -> b -> c -> a -> b -> a
        g = hierarchy_graph()
        phi = find_pointed_hom(P(C(5), "a1", "a1"), g, "a", "a")
        assert phi is not None and is_graph_map(phi, C(5), g)

    def test_equal_marks_need_equal_targets(self):
        assert not pointed_hom_exists(P(D(1), "a1", "a1"), K(2), "a1", "a2")
        assert pointed_hom_exists(P(D(1), "a1", "a1"), K(2), "a2", "a2")

    def test_distinct_marks_may_collapse(self):
        assert pointed_hom_exists(P(L(3), "a1", "a3"), D(1), "a1", "a1")

    def test_unknown_target(self):
        with pytest.raises(GraphError):
            pointed_hom_exists(P(L(2), "a1", "a2"), K(2), "a1", "nope")

    @given(pointed_graphs(max_n=4, max_arrows=5), graphs(max_n=4), st.data())
    def test_against_enumeration(self, p, g, data):
        v, v2 = data.draw(st.sampled_from(g.vertices)), data.draw(st.sampled_from(g.vertices))
        assert pointed_hom_exists(p, g, v, v2) == brute_pointed_hom(p, g, v, v2)

    @given(pointed_graphs(max_n=4, max_arrows=5), graphs(max_n=4), st.data())
    def test_monotone_in_target(self, p, g, data):
        v, v2 = data.draw(st.sampled_from(g.vertices)), data.draw(st.sampled_from(g.vertices))
        extra = data.draw(st.lists(st.tuples(st.sampled_from(g.vertices), st.sampled_from(g.vertices))))
        bigger = g.with_arrows(set(g.arrows) | set(extra))
        if pointed_hom_exists(p, g, v, v2):
            assert pointed_hom_exists(p, bigger, v, v2)

    @given(graphs(max_n=5), st.data())
    def test_symmetric_graph_swaps_marks(self, g, data):
        sym = evaluate(Builtin("us"), g)
        v, v2 = data.draw(st.sampled_from(g.vertices)), data.draw(st.sampled_from(g.vertices))
        assert pointed_hom_exists(P(sym, v, v2), sym, v2, v)


class TestHitting:
    def test_discrete_pair_hits_anything(self):
        assert hom_exists_hitting(D(2), C(4), "a1", "a3")

    def test_reciprocal_edge_misses_far_pair(self):
        us_l3 = evaluate(Builtin("us"), L(3))
        assert not hom_exists_hitting(K(2), us_l3, "a1", "a3")

    def test_identity(self):
        assert hom_exists_hitting(C(4), C(4), "a1", "a3")

    @given(graphs(max_n=3, prefix="w"), graphs(max_n=4), st.data())
    def test_against_enumeration(self, w, g, data):
        v, v2 = data.draw(st.sampled_from(g.vertices)), data.draw(st.sampled_from(g.vertices))
        assert hom_exists_hitting(w, g, v, v2) == brute_hitting(w, g, v, v2)


class TestFindHom:
    @given(graphs(max_n=4, prefix="w"), graphs(max_n=4))
    def test_found_maps_are_maps(self, w, g):
        phi = find_hom(w, g)
        assert phi is not None  # constant maps always exist
        assert is_graph_map(phi, w, g)

    def test_pins_honoured(self):
        phi = find_hom(L(3), C(3), {"a1": "a2"})
        assert phi["a1"] == "a2" and is_graph_map(phi, L(3), C(3))


class TestCovers:
    def test_arrow_covers_reciprocal(self):
        assert covers_pointed(P(L(2), "a1", "a2"), P(K(2), "a1", "a2"))

    def test_reciprocal_does_not_cover_arrow(self):
        assert not covers_pointed(P(K(2), "a1", "a2"), P(L(2), "a1", "a2"))

    @given(pointed_graphs(max_n=4, max_arrows=4))
    def test_reflexive(self, p):
        assert covers_pointed(p, p)

    @given(pointed_graphs(), pointed_graphs(), pointed_graphs())
    def test_transitive(self, a, b, c):
        if covers_pointed(a, b) and covers_pointed(b, c):
            assert covers_pointed(a, c)


class TestFamilyCovers:
    def test_reciprocal_covered_by_arrow(self):
        r = family_covers(MotifFamily.of([P(K(2), "a1", "a2")]), MotifFamily.of([P(L(2), "a1", "a2")]))
        assert r and r.uncovered is None

    def test_short_lines_covered_by_long(self):
        short = MotifFamily.of([P(L(n), "a1", f"a{n}") for n in range(1, 5)])
        assert family_covers(short, MotifFamily.of([P(L(4), "a1", "a4")]))

    @given(st.lists(pointed_graphs(max_n=4, max_arrows=4), min_size=1, max_size=3))
    def test_discrete_pair_covers_everything(self, ps):
        fam = MotifFamily.of(ps, pointed=True)
        assert family_covers(fam, MotifFamily.of([P(D(2), "a1", "a2")]))

    def test_witness(self):
        r = family_covers(MotifFamily.of([P(L(2), "a1", "a2")]), MotifFamily.of([P(K(2), "a1", "a2")]))
        assert not r and r.uncovered == P(L(2), "a1", "a2")

    def test_empty_is_vacuous(self):
        assert family_covers(MotifFamily.empty(True), MotifFamily.of([P(K(2), "a1", "a2")]))

    def test_flavours_must_match(self):
        with pytest.raises(GraphError):
            family_covers(MotifFamily.of([K(2)]), MotifFamily.of([P(K(2), "a1", "a2")]))

    def test_unpointed(self):
        assert family_covers(MotifFamily.of([C(2)]), MotifFamily.of([C(3)]))
        assert not family_covers(MotifFamily.of([C(3)]), MotifFamily.of([C(2)]))
