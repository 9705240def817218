"""File formats: graphs (JSON, plain text, DOT), motif families, networks and treegrams.

Graph JSON::

    {"vertices": ["a", "b"], "arrows": [["a", "b"]]}

Graph text: a ``vertices:`` line followed by one ``u v`` arrow per line; ``#``
starts a comment.

Family JSON::

    {"pointed": true, "motifs": [{"graph": {...}, "z": "a1", "zhat": "a2"}]}

Network JSON: ``{"points": [...], "weights": [[...], ...]}`` with ``"inf"`` for
+inf and exact decimal or ``p/q`` strings allowed.

Treegram JSON: ``{"births": {...}, "events": [{"epsilon": e, "partition": [[...]]}]}``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from .errors import GraphError, ParseError
from .family import MotifFamily
from .graph import Graph, PointedGraph
from .networks import Treegram, TreegramEvent
from .weights import ExtendedNetwork, format_weight, to_weight

PathLike = Union[str, Path]


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos, ("valid JSON",)) from None


def _field(obj: Any, key: str, kind: type, what: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{what} needs a {key!r} field", 0, (repr(key),))
    if not isinstance(obj[key], kind):
        raise ParseError(f"{what}.{key} has the wrong type", 0, (getattr(kind, "__name__", "scalar"),))
    return obj[key]


# ---------------------------------------------------------------- graphs

def graph_to_obj(g: Graph) -> Dict[str, Any]:
    return {"vertices": list(g.vertices), "arrows": [list(a) for a in g.sorted_arrows()]}


def graph_from_obj(obj: Any) -> Graph:
    vertices = _field(obj, "vertices", list, "graph")
    arrows = _field(obj, "arrows", list, "graph")
    if not all(isinstance(v, str) for v in vertices):
        raise ParseError("vertex names must be strings", 0, ("string",))
    if not all(isinstance(a, list) and len(a) == 2 for a in arrows):
        raise ParseError("each arrow must be a [source, target] pair", 0, ("pair",))
    try:
        return Graph(vertices, [tuple(a) for a in arrows])
    except GraphError as exc:
        raise ParseError(str(exc), 0, ()) from None


def parse_graph_text(text: str) -> Graph:
    vertices = None
    arrows = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            if vertices is None:
                if not body.startswith("vertices:"):
                    raise ParseError("graph text must start with 'vertices:'", offset, ("'vertices:'",))
                vertices = body[len("vertices:"):].split()
            else:
                parts = body.split()
                if len(parts) != 2:
                    raise ParseError(f"arrow line {body!r} needs two vertices", offset, ("'u v'",))
                arrows.append(tuple(parts))
        offset += len(line)
    if vertices is None:
        raise ParseError("empty graph text", offset, ("'vertices:'",))
    try:
        return Graph(vertices, arrows)
    except GraphError as exc:
        raise ParseError(str(exc), 0, ()) from None


def graph_to_text(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)] + [f"{u} {v}" for u, v in g.sorted_arrows()]
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  "{v}";' for v in g.vertices]
    lines += [f'  "{u}" -> "{v}";' for u, v in g.sorted_arrows()]
    return "\n".join(lines + ["}"]) + "\n"


def parse_graph(text: str) -> Graph:
    """JSON if the text looks like JSON, otherwise the line format."""
    if text.lstrip().startswith("{"):
        return graph_from_obj(_loads(text))
    return parse_graph_text(text)


def load_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text())


# ---------------------------------------------------------------- families

def family_to_obj(fam: MotifFamily) -> Dict[str, Any]:
    if fam.pointed:
        motifs = [{"graph": graph_to_obj(p.graph), "z": p.z, "zhat": p.zhat} for p in fam.elements]
    else:
        motifs = [{"graph": graph_to_obj(g)} for g in fam.elements]
    return {"pointed": fam.pointed, "motifs": motifs}


def family_from_obj(obj: Any) -> MotifFamily:
    pointed = _field(obj, "pointed", bool, "family")
    motifs = _field(obj, "motifs", list, "family")
    elements = []
    for m in motifs:
        g = graph_from_obj(_field(m, "graph", dict, "motif"))
        if pointed:
            z, zhat = _field(m, "z", str, "motif"), _field(m, "zhat", str, "motif")
            try:
                elements.append(PointedGraph(g, z, zhat))
            except GraphError as exc:
                raise ParseError(str(exc), 0, ()) from None
        else:
            elements.append(g)
    return MotifFamily.of(elements, pointed=pointed)


def parse_family(text: str) -> MotifFamily:
    return family_from_obj(_loads(text))


def load_family(path: PathLike) -> MotifFamily:
    return parse_family(Path(path).read_text())


# ---------------------------------------------------------------- networks

def network_to_obj(x: ExtendedNetwork) -> Dict[str, Any]:
    return {"points": list(x.points), "weights": [[format_weight(w) for w in row] for row in x.weights]}


def network_from_obj(obj: Any) -> ExtendedNetwork:
    points = _field(obj, "points", list, "network")
    weights = _field(obj, "weights", list, "network")
    return ExtendedNetwork(points, weights)


def parse_network(text: str) -> ExtendedNetwork:
    return network_from_obj(_loads(text))


def load_network(path: PathLike) -> ExtendedNetwork:
    return parse_network(Path(path).read_text())


# ---------------------------------------------------------------- treegrams

def treegram_to_obj(t: Treegram) -> Dict[str, Any]:
    return {
        "births": {p: format_weight(b) for p, b in sorted(t.births.items())},
        "events": [{"epsilon": format_weight(e.epsilon), "partition": [list(b) for b in e.partition]}
                   for e in t.events],
    }


def treegram_from_obj(obj: Any) -> Treegram:
    births = _field(obj, "births", dict, "treegram")
    events = _field(obj, "events", list, "treegram")
    parsed = []
    for e in events:
        eps = to_weight(_field(e, "epsilon", (int, float, str), "event"))
        part = _field(e, "partition", list, "event")
        parsed.append(TreegramEvent(Fraction(eps), tuple(tuple(b) for b in part)))
    return Treegram({p: Fraction(to_weight(b)) for p, b in births.items()}, tuple(parsed))


def parse_treegram(text: str) -> Treegram:
    return treegram_from_obj(_loads(text))
