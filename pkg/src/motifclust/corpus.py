"""Exhaustive and random graph corpora for checking functor statements."""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import List, Optional, Tuple

from .graph import Graph, PointedGraph

MAX_EXHAUSTIVE = 4


def _canonical(n: int, arrows: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[u], perm[v]) for u, v in arrows))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def graphs_of_size(n: int) -> Tuple[Graph, ...]:
    """All graphs on ``n`` vertices (named a1..an), one per isomorphism class.

    Brute-force canonical forms, so only meant for n <= 4 (218 classes).
    """
    if n > MAX_EXHAUSTIVE:
        raise ValueError(f"exhaustive enumeration is capped at {MAX_EXHAUSTIVE} vertices")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    seen = set()
    for bits in range(1 << len(pairs)):
        arrows = tuple(p for i, p in enumerate(pairs) if bits >> i & 1)
        seen.add(_canonical(n, arrows))
    names = [f"a{i}" for i in range(1, n + 1)]
    return tuple(Graph(names, [(names[u], names[v]) for u, v in arr]) for arr in sorted(seen))


def corpus(max_n: int = MAX_EXHAUSTIVE, min_n: int = 1) -> List[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in graphs_of_size(n)]


def pointed_corpus(max_n: int) -> List[PointedGraph]:
    return [PointedGraph(g, z, zh) for g in corpus(max_n) for z in g.vertices for zh in g.vertices]


def random_graph(n: int, p: float = 0.4, rng: Optional[random.Random] = None, prefix: str = "a") -> Graph:
    rng = rng or random.Random()
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    arrows = [(u, v) for u in names for v in names if u != v and rng.random() < p]
    return Graph(names, arrows)


def random_pointed(max_vertices: int, max_arrows: int, rng: random.Random) -> PointedGraph:
    n = rng.randint(1, max_vertices)
    names = [f"m{i}" for i in range(1, n + 1)]
    pairs = [(u, v) for u in names for v in names if u != v]
    k = rng.randint(0, min(max_arrows, len(pairs)))
    g = Graph(names, rng.sample(pairs, k))
    return PointedGraph(g, rng.choice(names), rng.choice(names))
