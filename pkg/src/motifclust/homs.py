"""Existence of graph maps between reflexive graphs, with pinned vertices.

The search is a plain backtracking over motif vertices with bitmask domains:
pinned vertices first, then by descending degree, and arc consistency enforced
on every arrow constraint after each assignment. Because self-loops are
implicit, a motif arrow ``x -> y`` only requires ``phi(x) == phi(y)`` or an
arrow ``phi(x) -> phi(y)`` in the target.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import GraphError
from .graph import Graph, PointedGraph, Vertex


def _union_of(masks: Tuple[int, ...], domain: int) -> int:
    acc = 0
    while domain:
        low = domain & -domain
        acc |= masks[low.bit_length() - 1]
        domain ^= low
    return acc


def _propagate(doms: List[int], arrows: List[Tuple[int, int]], watch: List[List[int]],
               out_masks: Tuple[int, ...], in_masks: Tuple[int, ...], dirty: List[int]) -> bool:
    """AC-3 over arrow constraints. ``watch[x]`` lists arrow ids touching x."""
    queue = list(dict.fromkeys(a for x in dirty for a in watch[x]))
    queued = set(queue)
    while queue:
        a = queue.pop()
        queued.discard(a)
        x, y = arrows[a]
        ny = doms[y] & _union_of(out_masks, doms[x])
        if ny != doms[y]:
            if not ny:
                return False
            doms[y] = ny
            for b in watch[y]:
                if b != a and b not in queued:
                    queue.append(b)
                    queued.add(b)
        nx = doms[x] & _union_of(in_masks, doms[y])
        if nx != doms[x]:
            if not nx:
                return False
            doms[x] = nx
            for b in watch[x]:
                if b != a and b not in queued:
                    queue.append(b)
                    queued.add(b)
    return True


def find_hom(motif: Graph, target: Graph, pins: Optional[Mapping[Vertex, Vertex]] = None) -> Optional[Dict[Vertex, Vertex]]:
    """Some graph map ``motif -> target`` honouring ``pins``, or None."""
    pins = dict(pins or {})
    for m, t in pins.items():
        if m not in motif:
            raise GraphError(f"pinned vertex {m!r} is not in the motif")
        if t not in target:
            raise GraphError(f"pin target {t!r} is not in the target graph")
    n = len(motif)
    if n == 0:
        return {}
    if len(target) == 0:
        return None
    mi = motif.index
    arrows = [(mi[u], mi[v]) for u, v in motif.sorted_arrows()]
    watch: List[List[int]] = [[] for _ in range(n)]
    for a, (x, y) in enumerate(arrows):
        watch[x].append(a)
        watch[y].append(a)
    full = (1 << len(target)) - 1
    doms = [full] * n
    for m, t in pins.items():
        doms[mi[m]] = 1 << target.index[t]
    out_masks, in_masks = target.out_masks, target.in_masks
    if not _propagate(doms, arrows, watch, out_masks, in_masks, list(range(n))):
        return None
    order = sorted(range(n), key=lambda i: (motif.vertices[i] not in pins, -len(watch[i]), i))

    def extend(k: int, doms: List[int]) -> Optional[List[int]]:
        if k == n:
            return doms
        x = order[k]
        dom = doms[x]
        while dom:
            low = dom & -dom
            dom ^= low
            trial = list(doms)
            trial[x] = low
            if _propagate(trial, arrows, watch, out_masks, in_masks, [x]):
                done = extend(k + 1, trial)
                if done is not None:
                    return done
        return None

    final = extend(0, doms)
    if final is None:
        return None
    return {motif.vertices[i]: target.vertices[final[i].bit_length() - 1] for i in range(n)}


def hom_exists(motif: Graph, target: Graph, pins: Optional[Mapping[Vertex, Vertex]] = None) -> bool:
    return find_hom(motif, target, pins) is not None


def _check_targets(g: Graph, *vs: Vertex) -> None:
    for v in vs:
        if v not in g:
            raise GraphError(f"{v!r} is not a vertex of the target graph")


def find_pointed_hom(omega: PointedGraph, g: Graph, v: Vertex, v2: Vertex) -> Optional[Dict[Vertex, Vertex]]:
    _check_targets(g, v, v2)
    if omega.z == omega.zhat:
        return find_hom(omega.graph, g, {omega.z: v}) if v == v2 else None
    return find_hom(omega.graph, g, {omega.z: v, omega.zhat: v2})


def pointed_hom_exists(omega: PointedGraph, g: Graph, v: Vertex, v2: Vertex) -> bool:
    """Is there a graph map sending the source mark to ``v`` and the target mark to ``v2``?"""
    return find_pointed_hom(omega, g, v, v2) is not None


def hom_exists_hitting(omega: Graph, g: Graph, v: Vertex, v2: Vertex) -> bool:
    """Is there a graph map ``omega -> g`` whose image contains both ``v`` and ``v2``?"""
    _check_targets(g, v, v2)
    for z in omega.vertices:
        for zhat in omega.vertices:
            if pointed_hom_exists(PointedGraph(omega, z, zhat), g, v, v2):
                return True
    return False


def covers_pointed(coverer: PointedGraph, covered: PointedGraph) -> bool:
    """Mark-preserving graph map from ``coverer`` onto the marks of ``covered``."""
    return pointed_hom_exists(coverer, covered.graph, covered.z, covered.zhat)


@dataclass(frozen=True)
class CoverReport:
    holds: bool
    uncovered: Optional[PointedGraph] = None

    def __bool__(self) -> bool:
        return self.holds


def family_covers(covered, coverer) -> CoverReport:
    """Decide ``covered ≼ coverer`` for two motif families of the same flavour.

    Pointed: each element of ``covered`` receives a mark-preserving map from
    some element of ``coverer``. Unpointed: for each graph of ``covered`` and
    each pair of its vertices, some graph of ``coverer`` maps onto a set
    containing both. On failure the report carries the uncovered pointed graph.
    """
    if covered.pointed != coverer.pointed:
        raise GraphError("cannot compare a pointed family with an unpointed one")
    if covered.pointed:
        for p in covered.elements:
            if not any(covers_pointed(q, p) for q in coverer.elements):
                return CoverReport(False, p)
        return CoverReport(True)
    for w in covered.elements:
        for z in w.vertices:
            for zhat in w.vertices:
                if not any(hom_exists_hitting(q, w, z, zhat) for q in coverer.elements):
                    return CoverReport(False, PointedGraph(w, z, zhat))
    return CoverReport(True)
