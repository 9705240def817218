"""Reflexive directed graphs, graph maps and the basic constructions on them.

Every vertex carries an implicit self-loop. Self-loops are never stored: an
arrow ``(u, v)`` in :attr:`Graph.arrows` always has ``u != v``, and a graph map
may send an arrow to an equality.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphError

Vertex = str
Arrow = Tuple[Vertex, Vertex]


@dataclass(frozen=True)
class Graph:
    vertices: Tuple[Vertex, ...]
    arrows: FrozenSet[Arrow] = frozenset()

    def __init__(self, vertices: Iterable[Vertex], arrows: Iterable[Sequence[Vertex]] = ()):
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise GraphError(f"duplicate vertex identifiers in {verts!r}")
        vset = set(verts)
        kept = set()
        for arrow in arrows:
            u, v = arrow
            if u not in vset or v not in vset:
                raise GraphError(f"arrow {u!r}->{v!r} mentions an undeclared vertex")
            if u != v:
                kept.add((u, v))
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "arrows", frozenset(kept))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.index

    def __repr__(self) -> str:
        arrows = ", ".join(f"{u}->{v}" for u, v in self.sorted_arrows())
        return f"Graph([{', '.join(self.vertices)}]; {arrows})"

    # -- lookup tables (computed lazily, the object itself is immutable) --

    @cached_property
    def index(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_masks(self) -> Tuple[int, ...]:
        """Bitmask of ``{v} | successors(v)`` for each vertex, by index."""
        masks = [1 << i for i in range(len(self.vertices))]
        for u, v in self.arrows:
            masks[self.index[u]] |= 1 << self.index[v]
        return tuple(masks)

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        masks = [1 << i for i in range(len(self.vertices))]
        for u, v in self.arrows:
            masks[self.index[v]] |= 1 << self.index[u]
        return tuple(masks)

    @cached_property
    def successors(self) -> Dict[Vertex, Tuple[Vertex, ...]]:
        out: Dict[Vertex, List[Vertex]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.arrows):
            out[u].append(v)
        return {k: tuple(vs) for k, vs in out.items()}

    @cached_property
    def predecessors(self) -> Dict[Vertex, Tuple[Vertex, ...]]:
        inc: Dict[Vertex, List[Vertex]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.arrows):
            inc[v].append(u)
        return {k: tuple(vs) for k, vs in inc.items()}

    def sorted_arrows(self) -> List[Arrow]:
        return sorted(self.arrows)

    def has_arrow(self, u: Vertex, v: Vertex) -> bool:
        """True iff ``u -> v`` is a (non-loop) arrow."""
        return (u, v) in self.arrows

    def leq(self, u: Vertex, v: Vertex) -> bool:
        """Arrow-or-equality relation."""
        return u == v or (u, v) in self.arrows

    def degree(self, v: Vertex) -> int:
        return len(self.successors[v]) + len(self.predecessors[v])

    def with_arrows(self, arrows: Iterable[Sequence[Vertex]]) -> "Graph":
        """Same vertex set, new arrow set."""
        return Graph(self.vertices, arrows)

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "Graph":
        """Rename vertices through an injective mapping (missing keys are kept)."""
        new = [mapping.get(v, v) for v in self.vertices]
        if len(set(new)) != len(new):
            raise GraphError("relabeling is not injective")
        return Graph(new, [(mapping.get(u, u), mapping.get(v, v)) for u, v in self.arrows])

    def induced(self, subset: Iterable[Vertex]) -> "Graph":
        keep = set(subset)
        return Graph(keep, [(u, v) for u, v in self.arrows if u in keep and v in keep])

    def reversed(self) -> "Graph":
        return Graph(self.vertices, [(v, u) for u, v in self.arrows])


@dataclass(frozen=True)
class PointedGraph:
    """A graph with a source mark and a target mark (they may coincide)."""

    graph: Graph
    z: Vertex
    zhat: Vertex

    def __post_init__(self) -> None:
        if self.z not in self.graph or self.zhat not in self.graph:
            raise GraphError(f"marks ({self.z!r}, {self.zhat!r}) are not vertices of {self.graph!r}")

    def __len__(self) -> int:
        return len(self.graph)

    def __repr__(self) -> str:
        return f"Pointed({self.graph!r}, z={self.z}, zhat={self.zhat})"


@dataclass(frozen=True)
class Partition:
    blocks: FrozenSet[FrozenSet[Vertex]]

    def __init__(self, blocks: Iterable[Iterable[Vertex]]):
        object.__setattr__(self, "blocks", frozenset(frozenset(b) for b in blocks))

    def validate(self, vertices: Iterable[Vertex]) -> None:
        seen: set = set()
        for b in self.blocks:
            if not b:
                raise GraphError("partition has an empty block")
            if seen & b:
                raise GraphError("partition blocks overlap")
            seen |= b
        if seen != set(vertices):
            raise GraphError("partition blocks do not cover the vertex set")

    def sorted_blocks(self) -> List[Tuple[Vertex, ...]]:
        return sorted(tuple(sorted(b)) for b in self.blocks)

    def block_of(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        return {v: b for b in self.blocks for v in b}


@dataclass(frozen=True)
class GraphMap:
    domain: Graph
    codomain: Graph
    assignment: Mapping[Vertex, Vertex] = field(hash=False)

    def __post_init__(self) -> None:
        if not is_graph_map(self.assignment, self.domain, self.codomain):
            raise GraphError("assignment does not send arrows to arrows or equalities")

    def __call__(self, v: Vertex) -> Vertex:
        return self.assignment[v]

    def then(self, other: "GraphMap") -> "GraphMap":
        """``other`` after ``self``."""
        return GraphMap(self.domain, other.codomain, {v: other(self(v)) for v in self.domain.vertices})


# ---------------------------------------------------------------- standard graphs

STANDARD_KINDS = ("K", "D", "L", "T", "C", "RL")


def standard_graph(kind: str, n: int) -> Graph:
    """The named graph on vertices ``a1 .. an``.

    ``RL`` is the reciprocal line (a line with both directions on each step).
    """
    if kind not in STANDARD_KINDS:
        raise GraphError(f"unknown standard graph kind {kind!r}")
    if n < 1 or (kind == "C" and n < 2):
        raise GraphError(f"invalid size {n} for standard graph {kind}")
    vs = [f"a{i}" for i in range(1, n + 1)]
    if kind == "K":
        arrows = [(u, v) for u in vs for v in vs]
    elif kind == "D":
        arrows = []
    elif kind == "L":
        arrows = list(zip(vs, vs[1:]))
    elif kind == "T":
        arrows = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    elif kind == "C":
        arrows = list(zip(vs, vs[1:])) + [(vs[-1], vs[0])]
    else:
        arrows = list(zip(vs, vs[1:])) + list(zip(vs[1:], vs))
    return Graph(vs, arrows)


def K(n: int) -> Graph:
    return standard_graph("K", n)


def D(n: int) -> Graph:
    return standard_graph("D", n)


def L(n: int) -> Graph:
    return standard_graph("L", n)


def T(n: int) -> Graph:
    return standard_graph("T", n)


def C(n: int) -> Graph:
    return standard_graph("C", n)


def RL(n: int) -> Graph:
    return standard_graph("RL", n)


def complete_on(g: Graph) -> Graph:
    return Graph(g.vertices, itertools.permutations(g.vertices, 2))


def discrete_on(g: Graph) -> Graph:
    return Graph(g.vertices)


# ---------------------------------------------------------------- constructions

def _suffixed(g: Graph, tag: str, taken: set) -> Dict[Vertex, Vertex]:
    ren = {}
    for v in g.vertices:
        name = f"{v}/{tag}"
        while name in taken:
            name += f"/{tag}"
        ren[v] = name
        taken.add(name)
    return ren


def disjoint_union_maps(g: Graph, h: Graph) -> Tuple[Graph, Dict[Vertex, Vertex], Dict[Vertex, Vertex]]:
    """Disjoint union plus the two inclusion maps.

    If the vertex sets collide, every vertex of the first copy gets ``/1``
    appended and every vertex of the second copy gets ``/2``.
    """
    if set(g.vertices).isdisjoint(h.vertices):
        left = {v: v for v in g.vertices}
        right = {v: v for v in h.vertices}
    else:
        taken = set(g.vertices) | set(h.vertices)
        left = _suffixed(g, "1", taken)
        right = _suffixed(h, "2", taken)
    verts = list(left.values()) + list(right.values())
    arrows = [(left[u], left[v]) for u, v in g.arrows] + [(right[u], right[v]) for u, v in h.arrows]
    return Graph(verts, arrows), left, right


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return disjoint_union_maps(g, h)[0]


def wedge_maps(g1: Graph, v1: Vertex, g2: Graph, v2: Vertex) -> Tuple[Graph, Dict[Vertex, Vertex], Dict[Vertex, Vertex]]:
    """Glue ``g1`` and ``g2`` at ``v1 ~ v2``; the glued vertex keeps the name ``v1``.

    Vertices of ``g2`` that clash with names in ``g1`` get a ``/2`` suffix.
    """
    if v1 not in g1:
        raise GraphError(f"{v1!r} is not a vertex of the first graph")
    if v2 not in g2:
        raise GraphError(f"{v2!r} is not a vertex of the second graph")
    left = {v: v for v in g1.vertices}
    taken = set(g1.vertices)
    right: Dict[Vertex, Vertex] = {}
    for v in g2.vertices:
        if v == v2:
            right[v] = v1
            continue
        name = v
        while name in taken:
            name += "/2"
        right[v] = name
        taken.add(name)
    verts = set(left.values()) | set(right.values())
    arrows = [(left[a], left[b]) for a, b in g1.arrows] + [(right[a], right[b]) for a, b in g2.arrows]
    return Graph(verts, arrows), left, right


def wedge(g1: Graph, v1: Vertex, g2: Graph, v2: Vertex) -> Graph:
    return wedge_maps(g1, v1, g2, v2)[0]


def block_name(block: Iterable[Vertex]) -> Vertex:
    return "+".join(sorted(block))


def quotient_maps(g: Graph, partition: Partition) -> Tuple[Graph, Dict[Vertex, Vertex]]:
    """Quotient graph and the projection sending each vertex to its block's name.

    Block ``B -> B'`` iff some ``x in B``, ``x' in B'`` have ``x -> x'``. This is
    the least arrow set making the projection a graph map.
    """
    partition.validate(g.vertices)
    proj = {v: block_name(b) for b in partition.blocks for v in b}
    arrows = {(proj[u], proj[v]) for u, v in g.arrows}
    return Graph(set(proj.values()), arrows), proj


def quotient(g: Graph, partition: Partition) -> Graph:
    return quotient_maps(g, partition)[0]


# ---------------------------------------------------------------- predicates

def is_graph_map(assignment: Mapping[Vertex, Vertex], g: Graph, h: Graph) -> bool:
    for v in g.vertices:
        if v not in assignment:
            raise GraphError(f"assignment is not total: {v!r} is unmapped")
    for v, w in assignment.items():
        if v not in g:
            raise GraphError(f"assignment mentions unknown source vertex {v!r}")
        if w not in h:
            raise GraphError(f"assignment mentions unknown target vertex {w!r}")
    return all(h.leq(assignment[u], assignment[v]) for u, v in g.arrows)


def is_symmetric(g: Graph) -> bool:
    return all((v, u) in g.arrows for u, v in g.arrows)


def is_transitive(g: Graph) -> bool:
    for u, v in g.arrows:
        for w in g.successors[v]:
            if w != u and (u, w) not in g.arrows:
                return False
    return True


def is_clustering(g: Graph) -> bool:
    return is_symmetric(g) and is_transitive(g)


def strongly_connected_components(g: Graph) -> List[Tuple[Vertex, ...]]:
    """Tarjan's algorithm, iterative. Components sorted internally and by first element."""
    index: Dict[Vertex, int] = {}
    low: Dict[Vertex, int] = {}
    on_stack: set = set()
    stack: List[Vertex] = []
    comps: List[Tuple[Vertex, ...]] = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            succ = g.successors[v]
            recurse = False
            while i < len(succ):
                w = succ[i]
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sorted(comps)


def weak_components(g: Graph) -> List[Tuple[Vertex, ...]]:
    parent = {v: v for v in g.vertices}

    def find(x: Vertex) -> Vertex:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.arrows:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: Dict[Vertex, List[Vertex]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(vs)) for vs in groups.values())


def has_no_cycles(g: Graph) -> bool:
    """No directed cycle through two or more distinct vertices."""
    return all(len(c) == 1 for c in strongly_connected_components(g))


@dataclass(frozen=True)
class Structure:
    is_symmetric: bool
    is_transitive: bool
    is_clustering: bool
    has_no_cycles: bool


def structural_predicates(g: Graph) -> Structure:
    sym, trans = is_symmetric(g), is_transitive(g)
    return Structure(sym, trans, sym and trans, has_no_cycles(g))


# ---------------------------------------------------------------- isomorphism

def _digest(obj: object) -> str:
    return hashlib.blake2b(repr(obj).encode(), digest_size=8).hexdigest()


def _refined_colors(g: Graph, marks: Sequence[Vertex] = ()) -> Dict[Vertex, Hashable]:
    """Colour refinement seeded by degree triples and (optionally) mark roles."""
    colors: Dict[Vertex, Hashable] = {}
    for v in g.vertices:
        out, inc = set(g.successors[v]), set(g.predecessors[v])
        role = tuple(i for i, m in enumerate(marks) if m == v)
        colors[v] = _digest((len(out), len(inc), len(out & inc), role))
    for _ in range(len(g)):
        new = {
            v: (
                colors[v],
                tuple(sorted(colors[w] for w in g.successors[v])),
                tuple(sorted(colors[w] for w in g.predecessors[v])),
            )
            for v in g.vertices
        }
        # short digests stay comparable across graphs without nesting growth
        new = {v: _digest(c) for v, c in new.items()}
        if len(set(new.values())) == len(set(colors.values())):
            colors = new
            break
        colors = new
    return colors


def invariant(g: Graph, marks: Sequence[Vertex] = ()) -> Hashable:
    """An isomorphism invariant, used for bucketing before exact checks."""
    colors = _refined_colors(g, marks)
    return (len(g), len(g.arrows), tuple(sorted(colors.values())))


def find_isomorphism(
    g: Graph, h: Graph, pins: Optional[Mapping[Vertex, Vertex]] = None
) -> Optional[Dict[Vertex, Vertex]]:
    """A bijection ``g -> h`` preserving arrows in both directions, or None."""
    if len(g) != len(h) or len(g.arrows) != len(h.arrows):
        return None
    pins = dict(pins or {})
    gm = tuple(pins.keys())
    hm = tuple(pins.values())
    cg, ch = _refined_colors(g, gm), _refined_colors(h, hm)
    if sorted(cg.values()) != sorted(ch.values()):
        return None
    order = sorted(g.vertices, key=lambda v: (v not in pins, -g.degree(v), v))
    by_color: Dict[Hashable, List[Vertex]] = {}
    for w in h.vertices:
        by_color.setdefault(ch[w], []).append(w)
    assign: Dict[Vertex, Vertex] = {}
    used: set = set()

    def consistent(v: Vertex, w: Vertex) -> bool:
        for u, x in assign.items():
            if g.has_arrow(u, v) != h.has_arrow(x, w) or g.has_arrow(v, u) != h.has_arrow(w, x):
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        candidates = [pins[v]] if v in pins else by_color.get(cg[v], [])
        for w in candidates:
            if w in used or ch[w] != cg[v] or not consistent(v, w):
                continue
            assign[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del assign[v]
            used.discard(w)
        return False

    return dict(assign) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def are_isomorphic_pointed(p: PointedGraph, q: PointedGraph) -> bool:
    if (p.z == p.zhat) != (q.z == q.zhat):
        return False
    pins = {p.z: q.z, p.zhat: q.zhat}
    return find_isomorphism(p.graph, q.graph, pins) is not None
