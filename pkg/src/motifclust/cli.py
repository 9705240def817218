"""Command-line interface.

Exit status: 0 on success (including checks that report ``false``), 1 on
unreadable or malformed input, 2 when an operation's hypotheses fail.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from .config import Caps
from .distance import network_distance_exact, network_distance_upper, stability_check
from .errors import BlowupError, GraphError, ParseError, PreconditionError
from .expr import parse_expr
from .functors import AXIOMS, Motif, a1_partition_failures, check_axiom, evaluate, graph_hierarchy
from .homs import family_covers
from .io import (dumps, family_to_obj, graph_to_dot, graph_to_obj, graph_to_text, load_family,
                 load_graph, load_network, network_to_obj, treegram_to_obj)
from .motifs import pointed_compose, simplify, wedge_cover_check
from .networks import apply_hat, render_ascii, render_dot, treegram
from .weights import format_weight


def _emit(text: str, dest: str) -> None:
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _pointed_obj(p) -> Dict[str, Any]:
    return {"graph": graph_to_obj(p.graph), "z": p.z, "zhat": p.zhat}


def _render_graph(g, fmt: str) -> str:
    if fmt == "dot":
        return graph_to_dot(g)
    if fmt in ("text", "ascii"):
        return graph_to_text(g)
    return dumps(graph_to_obj(g))


def _render_treegram(t, fmt: str) -> str:
    if fmt == "ascii":
        return render_ascii(t)
    if fmt == "dot":
        return render_dot(t)
    return dumps(treegram_to_obj(t))


def cmd_apply(a) -> None:
    f = parse_expr(a.functor)
    _emit(_render_graph(evaluate(f, load_graph(a.graph)), a.render), a.output)


def cmd_cluster(a) -> None:
    f = parse_expr(a.functor)
    out = apply_hat(f, load_network(a.network))
    tg = treegram(out) if a.treegram else None
    both_stdout = a.treegram == "-" and a.output == "-"
    if both_stdout and a.render == "json":
        _emit(dumps({"network": network_to_obj(out), "treegram": treegram_to_obj(tg)}), "-")
        return
    _emit(dumps(network_to_obj(out)), a.output)
    if tg is not None:
        _emit(_render_treegram(tg, a.render), a.treegram)


def cmd_distance(a) -> None:
    x, y = load_network(a.x), load_network(a.y)
    caps = Caps.from_env()
    if a.upper:
        res = network_distance_upper(x, y, restarts=a.restarts, seed=a.seed)
    else:
        res = network_distance_exact(x, y, cap=a.cap or caps.exact_distance)
    _emit(dumps({
        "distance": format_weight(res.distance),
        "witness": [list(p) for p in res.witness.sorted_pairs()],
        "mode": res.mode,
    }), a.output)


def cmd_compose(a) -> None:
    fam = pointed_compose(load_family(a.outer), load_family(a.inner), cap=a.cap)
    _emit(dumps(family_to_obj(fam)), a.output)


def cmd_simplify(a) -> None:
    _emit(dumps(family_to_obj(simplify(load_family(a.family)))), a.output)


def cmd_check(a) -> None:
    if a.what == "axiom":
        f = parse_expr(a.functor)
        report: Dict[str, Any] = {"axiom": a.which, "holds": check_axiom(f, a.which)}
        if a.which == "A1" and isinstance(f, Motif) and not report["holds"]:
            try:
                fails = a1_partition_failures(f.family)
            except PreconditionError:
                fails = []
            report["failing_partitions"] = [
                {"graph": graph_to_obj(w), "partition": [list(b) for b in p.sorted_blocks()]} for w, p in fails]
    elif a.what == "covers":
        res = family_covers(load_family(a.covered), load_family(a.coverer))
        report = {"holds": res.holds, "uncovered": _pointed_obj(res.uncovered) if res.uncovered else None}
    elif a.what == "wedge":
        res = wedge_cover_check(load_family(a.family), cap=a.cap)
        report = {"holds": res.holds}
        if not res.holds:
            w1, z1, w2, z2 = res.pieces
            report.update({
                "wedge": graph_to_obj(res.wedge),
                "pair": list(res.pair),
                "pieces": [{"graph": graph_to_obj(w1), "basepoint": z1},
                           {"graph": graph_to_obj(w2), "basepoint": z2}],
            })
    else:
        res = stability_check(parse_expr(a.functor), load_network(a.x), load_network(a.y))
        report = {"lhs": format_weight(res.lhs), "rhs": format_weight(res.rhs), "holds": res.holds}
    _emit(dumps(report), a.output)


def cmd_hierarchy(a) -> None:
    u = graph_hierarchy(load_graph(a.graph), [load_family(p) for p in a.family])
    t = treegram(u)
    if a.render == "json":
        _emit(dumps({"ultranetwork": network_to_obj(u), "treegram": treegram_to_obj(t)}), a.output)
    else:
        _emit(_render_treegram(t, a.render), a.output)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="motifclust", description="Clustering of directed graphs via graph endofunctors.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, output: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        if output:
            sp.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
        return sp

    sp = add("apply", cmd_apply, "evaluate a functor expression on a graph")
    sp.add_argument("--functor", required=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--render", choices=("json", "text", "ascii", "dot"), default="json")

    sp = add("cluster", cmd_cluster, "apply a functor at every scale of a network")
    sp.add_argument("--functor", required=True)
    sp.add_argument("--network", required=True)
    sp.add_argument("--treegram", metavar="PATH", help="also write the treegram ('-' for stdout)")
    sp.add_argument("--render", choices=("json", "ascii", "dot"), default="json")

    sp = add("distance", cmd_distance, "network distance between two networks")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--upper", action="store_true", help="local-search upper bound")
    sp.add_argument("--restarts", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cap", type=int, default=None, help="largest |X|*|Y| for the exact solver")
    sp.add_argument("x")
    sp.add_argument("y")

    sp = add("compose", cmd_compose, "compose two pointed motif families")
    sp.add_argument("--outer", required=True)
    sp.add_argument("--inner", required=True)
    sp.add_argument("--cap", type=int, default=None)

    sp = add("simplify", cmd_simplify, "drop covered members of a motif family")
    sp.add_argument("--family", required=True)

    sp = add("check", cmd_check, "axiom, covering, wedge and stability checks", output=False)
    checks = sp.add_subparsers(dest="what", required=True)
    c = checks.add_parser("axiom")
    c.add_argument("--functor", required=True)
    c.add_argument("--which", choices=AXIOMS, default="A1")
    c = checks.add_parser("covers")
    c.add_argument("--covered", required=True)
    c.add_argument("--coverer", required=True)
    c = checks.add_parser("wedge")
    c.add_argument("--family", required=True)
    c.add_argument("--cap", type=int, default=None)
    c = checks.add_parser("stability")
    c.add_argument("--functor", required=True)
    c.add_argument("x")
    c.add_argument("y")
    for c in checks.choices.values():
        c.add_argument("-o", "--output", default="-")

    sp = add("hierarchy", cmd_hierarchy, "ultranetwork of a graph from nested motif families")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--family", action="append", required=True, help="repeat, innermost first")
    sp.add_argument("--render", choices=("json", "ascii", "dot"), default="json")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (OSError, GraphError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except BlowupError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
