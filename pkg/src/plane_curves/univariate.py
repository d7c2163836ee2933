"""Dense univariate polynomials as coefficient lists, lowest degree first.

Coefficients may be ``Fraction`` or ``FieldElement``; only ring operations,
division by a nonzero coefficient and comparison with ``0`` are used.
"""
from __future__ import annotations

from typing import Sequence


def strip(a: Sequence) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(strip(a)) - 1


def add(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        if k < len(a) and k < len(b):
            out.append(a[k] + b[k])
        elif k < len(a):
            out.append(a[k])
        else:
            out.append(b[k])
    return strip(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    a, b = strip(a), strip(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return strip(out)


def scale(a, c):
    return strip([c * x for x in a])


def divmod_poly(a, b):
    """Euclidean division; ``b`` must be nonzero."""
    a, b = strip(a), strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for k, bk in enumerate(b):
            r[shift + k] = r[shift + k] - c * bk
        r.pop()
        r = strip(r)
    return strip(q), r


def monic(a):
    a = strip(a)
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def gcd(a, b):
    """Monic gcd (zero if both inputs are zero)."""
    a, b = strip(a), strip(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def ext_gcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = strip(a), strip(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    lead = r0[-1]
    return monic(r0), [c / lead for c in s0], [c / lead for c in t0]


def derivative(a):
    return strip([k * a[k] for k in range(1, len(a))])


def is_squarefree(a) -> bool:
    a = strip(a)
    if len(a) <= 2:
        return bool(a)
    return degree(gcd(a, derivative(a))) == 0


def squarefree_decomposition(a):
    """Yun's algorithm (characteristic zero).

    Returns pairs ``(factor, multiplicity)`` with monic, pairwise coprime,
    squarefree factors of positive degree.
    """
    a = monic(a)
    if degree(a) <= 0:
        return []
    out = []
    da = derivative(a)
    g = gcd(a, da)
    b = divmod_poly(a, g)[0]
    c = divmod_poly(da, g)[0]
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        h = gcd(b, d)
        if degree(h) > 0:
            out.append((h, i))
        b = divmod_poly(b, h)[0]
        c = divmod_poly(d, h)[0]
        d = sub(c, derivative(b))
        i += 1
    return out


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
