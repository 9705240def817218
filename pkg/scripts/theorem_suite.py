"""Run the functor theorem checks over the exhaustive small-graph corpus.

    python3 scripts/theorem_suite.py --max-vertices 4
"""
import argparse
import time

from motifclust.corpus import MAX_EXHAUSTIVE, corpus
from motifclust.fixtures import expression_zoo
from motifclust.functors import BUILTIN_NAMES
from motifclust.theorems import clustering_names, theorem_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=MAX_EXHAUSTIVE, choices=range(1, MAX_EXHAUSTIVE + 1))
    args = ap.parse_args()

    graphs = corpus(args.max_vertices)
    zoo = expression_zoo()
    print(f"{len(graphs)} graphs up to isomorphism, {len(zoo)} expressions")
    print("clustering on the corpus:", ", ".join(clustering_names(zoo, graphs)))
    start = time.perf_counter()
    report = theorem_suite(zoo, graphs, [n for n in BUILTIN_NAMES if n != "comp"])
    for statement, violations in report.items():
        print(f"{statement:22s} {len(violations)} violations")
        for v in violations:
            print(f"    {v.expression}: {v.graph!r} {v.detail}")
    print(f"done in {time.perf_counter() - start:.1f}s")
    return 1 if any(report.values()) else 0


if __name__ == "__main__":
    raise SystemExit(main())
