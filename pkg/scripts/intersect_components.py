"""Singular points of a union of lines and conics: pairwise intersections
of the components, printed as ``point:`` lines for a curve file.

Usage: python scripts/intersect_components.py "x" "y" "x^2+y^2-z^2" ...

Points are solved with sympy; irrational coordinates are reported with a
warning since curve files need them over the declared field.
"""
import itertools
import sys

import sympy as sp

x, y, z = sp.symbols("x y z")


def normalize(pt):
    pt = [sp.nsimplify(sp.simplify(c)) for c in pt]
    lead = next(c for c in pt if c != 0)
    return tuple(sp.simplify(c / lead) for c in pt)


def meet(f, g):
    pts = set()
    for chart in ((x, y, z), (y, z, x), (z, x, y)):
        one, a, b = chart
        sols = sp.solve([f.subs(one, 1), g.subs(one, 1)], [a, b], dict=True)
        for s in sols:
            pt = {one: sp.Integer(1), a: s.get(a, a), b: s.get(b, b)}
            if any(v.free_symbols for v in pt.values()):
                continue
            pts.add(normalize([pt[x], pt[y], pt[z]]))
    return pts


def main(components):
    comps = [sp.sympify(c) for c in components]
    f = sp.prod(comps)
    points = set()
    for a, b in itertools.combinations(comps, 2):
        points |= meet(a, b)
    for pt in sorted(points, key=str):
        through = sum(1 for c in comps if sp.simplify(c.subs(dict(zip((x, y, z), pt)))) == 0)
        coords = ":".join(str(c).replace("**", "^").replace("I", "i") for c in pt)
        note = "" if all(c.is_rational for c in pt) else "   # irrational"
        print(f"point: ({coords})   # {through} components{note}")
    print(f"# {len(points)} points, degree {sp.Poly(f, x, y, z).total_degree()}", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1:])
