"""Algebra of motif families: attachment, composition, lifting, simplification,
wedge covering and bounded extraction of pointed representers.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Optional, Tuple

from .corpus import MAX_EXHAUSTIVE, corpus
from .errors import BlowupError, GraphError, PreconditionError
from .family import MotifFamily, _sort_key, dedup
from .functors import Expr, evaluate, pointed_classes
from .graph import Arrow, Graph, PointedGraph, Vertex, wedge_maps
from .homs import covers_pointed, family_covers, pointed_hom_exists

DEFAULT_CAP = 10000


def blowup_cap(cap: Optional[int] = None) -> int:
    """Explicit cap, else ``MOTIFCLUST_CAP`` from the environment, else 10000."""
    if cap is not None:
        return cap
    env = os.environ.get("MOTIFCLUST_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class AttachmentPlan:
    """A base pointed motif and, for each of its arrows, the pointed motif glued onto it."""

    base: PointedGraph
    assignment: Mapping[Arrow, PointedGraph] = field(hash=False)

    def __post_init__(self) -> None:
        missing = self.base.graph.arrows - set(self.assignment)
        if missing:
            raise GraphError(f"attachment plan misses arrows {sorted(missing)}")


def attach(plan: AttachmentPlan) -> PointedGraph:
    """Glue each assigned motif along its arrow (source mark on the arrow's tail,
    target mark on its head), then keep only the glued motifs' arrows.
    """
    base = plan.base.graph
    edges = base.sorted_arrows()
    parent: Dict[Hashable, Hashable] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb, key=repr)] = min(ra, rb, key=repr)

    for v in base.vertices:
        find(("b", v))
    for k, (s, t) in enumerate(edges):
        piece = plan.assignment[(s, t)]
        for u in piece.graph.vertices:
            find((k, u))
        join(("b", s), (k, piece.z))
        join(("b", t), (k, piece.zhat))

    members: Dict[Hashable, List[Hashable]] = {}
    for node in list(parent):
        members.setdefault(find(node), []).append(node)
    taken = set(base.vertices)
    names: Dict[Hashable, Vertex] = {}
    for root, nodes in sorted(members.items(), key=lambda kv: repr(kv[0])):
        base_names = sorted(n[1] for n in nodes if n[0] == "b")
        if base_names:
            name = base_names[0]
        else:
            k, u = min(nodes, key=repr)
            name = f"e{k}.{u}"
            while name in taken:
                name += "'"
            taken.add(name)
        for n in nodes:
            names[n] = name
    arrows = []
    for k, (s, t) in enumerate(edges):
        for u, w in plan.assignment[(s, t)].graph.arrows:
            arrows.append((names[(k, u)], names[(k, w)]))
    g = Graph(set(names.values()), arrows)
    return PointedGraph(g, names[("b", plan.base.z)], names[("b", plan.base.zhat)])


def compose_bound(outer: MotifFamily, inner: MotifFamily) -> int:
    return sum(len(inner) ** len(p.graph.arrows) for p in outer.elements)


def pointed_compose(outer: MotifFamily, inner: MotifFamily, cap: Optional[int] = None) -> MotifFamily:
    """Family representing (outer's functor) after (inner's functor).

    Every arrow of every outer motif is replaced, in all possible ways, by an
    inner motif; results are deduplicated up to pointed isomorphism.
    """
    if not (outer.pointed and inner.pointed):
        raise GraphError("composition is defined on pointed families")
    bound = compose_bound(outer, inner)
    limit = blowup_cap(cap)
    if bound > limit:
        raise BlowupError("pointed composition", bound, limit)
    out = []
    for base in outer.elements:
        edges = base.graph.sorted_arrows()
        for choice in itertools.product(inner.elements, repeat=len(edges)):
            out.append(attach(AttachmentPlan(base, dict(zip(edges, choice)))))
    name = f"({outer})<>({inner})" if outer.name and inner.name else ""
    return MotifFamily(True, dedup(out), name)


def lift(family: MotifFamily) -> MotifFamily:
    """Every marking of every motif, up to pointed isomorphism."""
    if family.pointed:
        raise GraphError("lift takes an unpointed family")
    return MotifFamily(True, dedup(p for w in family.elements for p in pointed_classes(w)),
                       f"lift({family})" if family.name else "")


def simplify(family: MotifFamily) -> MotifFamily:
    """Drop members covered by another remaining member.

    Candidates are tried largest first, so among mutually covering members the
    smaller survives. The result represents the same functor.
    """
    remaining = list(family.elements)
    for cand in sorted(family.elements, key=_sort_key, reverse=True):
        others = [e for e in remaining if e is not cand]
        if not others:
            break
        if family.pointed:
            covered = any(covers_pointed(o, cand) for o in others)
        else:
            covered = family_covers(MotifFamily(False, (cand,)), MotifFamily(False, tuple(others))).holds
        if covered:
            remaining = others
    return MotifFamily(family.pointed, tuple(sorted(remaining, key=_sort_key)), family.name)


@dataclass(frozen=True)
class WedgeReport:
    holds: bool
    wedge: Optional[Graph] = None
    pair: Optional[Tuple[Vertex, Vertex]] = None
    pieces: Optional[Tuple[Graph, Vertex, Graph, Vertex]] = None

    def __bool__(self) -> bool:
        return self.holds


def wedge_count(family: MotifFamily) -> int:
    sizes = [len(w) for w in family.elements]
    return sum(sizes) ** 2


def wedge_cover_check(family: MotifFamily, cap: Optional[int] = None) -> WedgeReport:
    """Is every wedge of two members (glued at any vertices) covered by the family?

    A wedge is covered when every pair of its vertices lies in the image of a
    graph map from some member. Pairs inside one glued piece are covered by the
    piece's inclusion, so only cross pairs are searched. Returns the first
    failing wedge and pair.
    """
    if family.pointed:
        raise GraphError("wedge covering is defined on unpointed families")
    limit = blowup_cap(cap)
    count = wedge_count(family)
    if count > limit:
        raise BlowupError("wedge enumeration", count, limit)
    marked = [p for w in family.elements for p in pointed_classes(w) if p.z != p.zhat]
    for w1, w2 in itertools.product(family.elements, repeat=2):
        for z1, z2 in itertools.product(w1.vertices, w2.vertices):
            g, left, right = wedge_maps(w1, z1, w2, z2)
            side1 = sorted(set(left.values()) - {left[z1]})
            side2 = sorted(set(right.values()) - {left[z1]})
            for p, q in itertools.product(side1, side2):
                if not any(pointed_hom_exists(m, g, p, q) for m in marked):
                    return WedgeReport(False, g, (p, q), (w1, z1, w2, z2))
    return WedgeReport(True)


def omega_star_of(f: Expr, k: int) -> MotifFamily:
    """Pointed motifs on at most ``k`` vertices whose marks are joined in ``f``'s output.

    The resulting pointed family agrees with ``f`` on every graph with at most
    ``k`` vertices.
    """
    if k > MAX_EXHAUSTIVE:
        raise PreconditionError(f"size cap {k} > {MAX_EXHAUSTIVE} would explode the corpus",
                                "bounded pointed representers")
    out = []
    for g in corpus(k):
        h = evaluate(f, g)
        out += [PointedGraph(g, z, zh) for z in g.vertices for zh in g.vertices if h.leq(z, zh)]
    return MotifFamily(True, dedup(out), f"omega*({f},{k})")
