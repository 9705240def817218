"""Compare network distances before and after clustering random integer networks.

    python3 scripts/stability_experiment.py --pairs 200 --seed 0
"""
import argparse
import random
from fractions import Fraction

from motifclust.distance import stability_check
from motifclust.expr import parse_expr
from motifclust.weights import ExtendedNetwork


def random_network(rng, max_points, max_weight, prefix):
    pts = [f"{prefix}{i}" for i in range(rng.randint(1, max_points))]
    return ExtendedNetwork(pts, [[rng.randint(0, max_weight) for _ in pts] for _ in pts])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--max-points", type=int, default=4)
    ap.add_argument("--max-weight", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--functors", nargs="+", default=["rec", "nrec", "tc.us", "tc"])
    args = ap.parse_args()

    rng = random.Random(args.seed)
    pairs = [(random_network(rng, args.max_points, args.max_weight, "x"),
              random_network(rng, args.max_points, args.max_weight, "y")) for _ in range(args.pairs)]
    failed = 0
    print(f"{'functor':10s} {'violations':>10s} {'mean ratio':>11s} {'max ratio':>10s}")
    for text in args.functors:
        f = parse_expr(text)
        ratios, bad = [], 0
        for x, y in pairs:
            r = stability_check(f, x, y)
            bad += not r.holds
            if r.rhs:
                ratios.append(r.lhs / r.rhs)
        mean = sum(ratios, Fraction(0)) / len(ratios) if ratios else Fraction(0)
        print(f"{text:10s} {bad:10d} {float(mean):11.3f} {float(max(ratios, default=0)):10.3f}")
        failed += bad
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
