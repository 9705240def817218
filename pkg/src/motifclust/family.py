"""Finite motif families, pointed or unpointed, deduplicated up to isomorphism."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Tuple, Union

from .errors import GraphError
from .graph import Graph, PointedGraph, are_isomorphic, are_isomorphic_pointed, invariant

Element = Union[Graph, PointedGraph]


def _key(e: Element) -> Hashable:
    if isinstance(e, PointedGraph):
        return ("p", e.z == e.zhat, invariant(e.graph, (e.z, e.zhat)))
    return ("u", invariant(e))


def _same(a: Element, b: Element) -> bool:
    if isinstance(a, PointedGraph):
        return are_isomorphic_pointed(a, b)
    return are_isomorphic(a, b)


def _sort_key(e: Element) -> tuple:
    g = e.graph if isinstance(e, PointedGraph) else e
    marks = (e.z, e.zhat) if isinstance(e, PointedGraph) else ()
    return (len(g), len(g.arrows), g.vertices, tuple(g.sorted_arrows()), marks)


def dedup(elements: Iterable[Element]) -> Tuple[Element, ...]:
    """Keep the first representative of each isomorphism class; output sorted."""
    buckets: Dict[Hashable, List[Element]] = {}
    for e in sorted(elements, key=_sort_key):
        bucket = buckets.setdefault(_key(e), [])
        if not any(_same(e, f) for f in bucket):
            bucket.append(e)
    return tuple(sorted((e for b in buckets.values() for e in b), key=_sort_key))


@dataclass(frozen=True)
class MotifFamily:
    """A finite set of (pointed) motifs.

    Use :meth:`of` to build one: it checks the flavour of every element and
    removes isomorphic duplicates. ``name`` is a display label only.
    """

    pointed: bool
    elements: Tuple[Element, ...]
    name: str = field(default="", compare=False)

    @classmethod
    def of(cls, elements: Iterable[Element], pointed: bool | None = None, name: str = "") -> "MotifFamily":
        elems = list(elements)
        if pointed is None:
            if not elems:
                raise GraphError("cannot infer the flavour of an empty family; pass pointed=")
            pointed = isinstance(elems[0], PointedGraph)
        want = PointedGraph if pointed else Graph
        for e in elems:
            if not isinstance(e, want):
                raise GraphError(f"{'pointed' if pointed else 'unpointed'} family got element {e!r}")
        return cls(pointed, dedup(elems), name)

    @classmethod
    def empty(cls, pointed: bool) -> "MotifFamily":
        return cls(pointed, ())

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return self.name or f"<{'pointed ' if self.pointed else ''}family of {len(self)}>"

    def max_size(self) -> int:
        return max((len(e) for e in self.elements), default=0)

    def equivalent(self, other: "MotifFamily") -> bool:
        """Same flavour and the same isomorphism classes of members."""
        if self.pointed != other.pointed or len(self) != len(other):
            return False
        return all(any(_same(a, b) for b in other.elements) for a in self.elements)
