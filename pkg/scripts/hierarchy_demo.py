"""Nested cycle families on a small graph: ultranetwork and treegram.

    python3 scripts/hierarchy_demo.py [--render ascii|dot]
"""
import argparse

from motifclust.fixtures import cycle_families, hierarchy_graph
from motifclust.functors import graph_hierarchy
from motifclust.networks import render_ascii, render_dot, treegram
from motifclust.weights import format_weight


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--render", choices=("ascii", "dot"), default="ascii")
    ap.add_argument("--levels", type=int, default=4, help="families {C2}, ..., {C_{levels+1}}")
    args = ap.parse_args()

    g = hierarchy_graph()
    u = graph_hierarchy(g, cycle_families(args.levels))
    print("arrows:", " ".join(f"{a}->{b}" for a, b in g.sorted_arrows()))
    print("merge levels:")
    print("     " + " ".join(f"{p:>3s}" for p in u.points))
    for p in u.points:
        print(f"{p:>4s} " + " ".join(f"{str(format_weight(u.weight(p, q))):>3s}" for q in u.points))
    t = treegram(u)
    print(render_ascii(t) if args.render == "ascii" else render_dot(t), end="")


if __name__ == "__main__":
    raise SystemExit(main())
