"""Size caps for the combinatorial constructions."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .corpus import MAX_EXHAUSTIVE
from .distance import DEFAULT_EXACT_CAP
from .motifs import DEFAULT_CAP


@dataclass(frozen=True)
class Caps:
    blowup: int = DEFAULT_CAP  # composition and wedge enumeration
    exact_distance: int = DEFAULT_EXACT_CAP  # |X| * |Y| for the exact network distance
    corpus_vertices: int = MAX_EXHAUSTIVE  # largest exhaustive corpus

    @classmethod
    def from_env(cls) -> "Caps":
        env = os.environ.get("MOTIFCLUST_CAP")
        return cls(blowup=int(env)) if env else cls()
