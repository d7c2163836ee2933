"""Search for a real line arrangement with prescribed weak combinatorics.

Starts from a base set of lines and tries adding lines a*x + b*y + c*z with
small integer coefficients until the tally of k-fold points matches.

Usage: python scripts/search_arrangement.py "9 6 4 3" [--base x y z x-y x-z y-z] [--bound 2]

Prints the lines as a ``lines:`` block for a curve file.
"""
import argparse
import itertools
import math
import sys

from plane_curves.arrangements import LineArrangement, intersection_lattice, parse_tuple
from plane_curves.errors import ProportionalLines
from plane_curves.poly import poly_parse


def candidate_lines(bound):
    seen = set()
    for a, b, c in itertools.product(range(-bound, bound + 1), repeat=3):
        if math.gcd(a, b, c) != 1:
            continue
        lead = next(v for v in (a, b, c) if v)
        key = tuple(v * (1 if lead > 0 else -1) for v in (a, b, c))
        if key in seen:
            continue
        seen.add(key)
        yield poly_parse(f"{key[0]}*x + {key[1]}*y + {key[2]}*z")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("tuple", help='"d t2 t3 t4 ..."')
    ap.add_argument("--base", nargs="*", default=["x", "y", "z", "x - y", "x - z", "y - z"])
    ap.add_argument("--bound", type=int, default=2)
    args = ap.parse_args(argv)

    target = parse_tuple(args.tuple)
    base = [poly_parse(s) for s in args.base]
    need = target.d - len(base)
    if need < 0:
        sys.exit("base already has more lines than requested")
    pool = [l for l in candidate_lines(args.bound)
            if not any(_proportional(l, b) for b in base)]
    for extra in itertools.combinations(pool, need):
        try:
            arr = LineArrangement(base + list(extra))
        except ProportionalLines:
            continue
        if intersection_lattice(arr)[1].tk == target.tk:
            print("lines:")
            for l in arr.lines:
                print(f"  {l}")
            return 0
    print("no arrangement found", file=sys.stderr)
    return 1


def _proportional(a, b):
    try:
        LineArrangement([a, b])
    except ProportionalLines:
        return True
    return False


if __name__ == "__main__":
    sys.exit(main())
