"""Classify every periodic quiddity on a small grid.

For each multiple word prints whether the propagated pattern is an infinite
frieze, the first bad entry otherwise, and the root-system verdict of the
associated Cartan graph.
"""

import argparse
from itertools import product

from friezes.cartan import check_root_system, graph_from_quiddity, minimal_period
from friezes.errors import NotAnInfiniteFriezeError
from friezes.strip import InfiniteFriezeView, PeriodicQuiddity, positivity_check, to_strip


def classify(q):
    v = InfiniteFriezeView(q)
    H = 4 * q.T * q.p
    try:
        positivity_check(v, H)
        s = to_strip(v)
        frieze = f"frieze  strip: {len(s.peripheral)} peripheral, {len(s.bridging)} bridging per period"
    except NotAnInfiniteFriezeError as exc:
        frieze = f"fails   {exc.report.kind} at {exc.location}"
    rep = check_root_system(graph_from_quiddity(q), 2 * H)
    return f"p={q.p} {list(q.multiples)!s:<10} {frieze:<52} R4={rep.r4}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--period", type=int, default=3, help="largest period")
    ap.add_argument("--max-multiple", type=int, default=3)
    args = ap.parse_args()
    for p in args.p:
        for T in range(1, args.period + 1):
            for word in product(range(1, args.max_multiple + 1), repeat=T):
                if minimal_period(word) == word:
                    print(classify(PeriodicQuiddity(p, word)))


if __name__ == "__main__":
    main()
