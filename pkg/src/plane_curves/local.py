"""Local invariants of a curve germ at the origin through truncated jets,
and the ADE / simple elliptic classifier."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from . import univariate as up
from .errors import NonIsolated, NotOnCurve, NotSingular
from .linalg import ExactMatrix, basis_monomials, rank_exact
from .poly import Poly, ProjPoint, poly_localize
from .stypes import (E6, E7, E8, T236, X9, A, D, SingularityType,
                     unclassified)


@dataclass
class SingularityRecord:
    point: Optional[ProjPoint]
    mu: int
    tau: int
    mult: int
    tc_pattern: tuple
    stype: SingularityType
    lct: Optional[Fraction]

    def to_dict(self):
        return {
            "point": [str(c) for c in self.point.coords] if self.point else None,
            "mu": self.mu,
            "tau": self.tau,
            "mult": self.mult,
            "tc_pattern": list(self.tc_pattern),
            "type": str(self.stype),
            "lct": str(self.lct) if self.lct is not None else None,
        }

    @classmethod
    def from_dict(cls, d, field=None):
        from .poly import parse_constant

        point = None
        if d["point"] is not None and field is not None:
            point = ProjPoint([parse_constant(c, field) for c in d["point"]])
        return cls(point, d["mu"], d["tau"], d["mult"], tuple(d["tc_pattern"]),
                   SingularityType.parse(d["type"]),
                   Fraction(d["lct"]) if d["lct"] is not None else None)


def jet_matrix(gens: Sequence[Poly], N: int) -> ExactMatrix:
    """Columns: every monomial multiple of every generator, truncated below
    total degree N; rows: the monomials of degree < N."""
    basis = basis_monomials(2, N, truncated=True)
    fld = gens[0].field
    ents = {}
    col = 0
    for g in gens:
        g = g.truncate(N)
        if not g:
            continue
        o = g.order()
        for m in basis_monomials(2, N - o, truncated=True).monomials:
            for e, c in g.terms.items():
                ee = (e[0] + m[0], e[1] + m[1])
                if ee[0] + ee[1] < N:
                    ents[(basis.index[ee], col)] = c
            col += 1
    return ExactMatrix(fld, len(basis), col, ents)


def jet_quotient_dim(gens: Sequence[Poly], N: int) -> int:
    """dim K[x,y] / (<gens> + m^N) with m = <x, y>."""
    if N < 1:
        raise ValueError("truncation order must be >= 1")
    return comb(N + 1, 2) - rank_exact(jet_matrix(gens, N))


def _stable_colength(gens, deg: int) -> int:
    # A strictly growing sequence passes any colength bound quickly, so the
    # Bezout bound (deg-1)^2 for isolated points ends hopeless searches early.
    bound = max(deg - 1, 1) ** 2
    cap = 2 * deg * deg
    prev = None
    for N in range(2, cap + 1):
        val = jet_quotient_dim(gens, N)
        if val == prev:
            return val
        if val > bound:
            break
        prev = val
    raise NonIsolated("local algebra does not stabilize; singularity is not isolated")


def _require_singular(g: Poly):
    if g.constant_term():
        raise NotOnCurve("germ does not vanish at the origin")
    if any(g.diff(i).constant_term() for i in range(2)):
        raise NotSingular("gradient does not vanish at the origin")


def local_milnor(g: Poly) -> int:
    _require_singular(g)
    return _stable_colength([g.diff(0), g.diff(1)], g.degree())


def local_tjurina(g: Poly) -> int:
    _require_singular(g)
    return _stable_colength([g, g.diff(0), g.diff(1)], g.degree())


def multiplicity(g: Poly) -> int:
    return g.order()


def tangent_cone_pattern(g: Poly) -> tuple:
    """Multiplicities of the distinct tangent lines over the algebraic
    closure, in decreasing order."""
    m = g.order()
    cone = g.homogeneous_part(m)
    # cone(x, 1) as a univariate polynomial in x; missing degree = line y = 0
    u = up.strip([cone.coefficient((a, m - a)) for a in range(m + 1)])
    pattern = []
    for factor, mult in up.squarefree_decomposition(u):
        pattern += [mult] * up.degree(factor)
    at_infinity = m - up.degree(u)
    if at_infinity:
        pattern.append(at_infinity)
    return tuple(sorted(pattern, reverse=True))


def _type_from_invariants(mult: int, pattern: tuple, mu: int) -> SingularityType:
    if mult == 2:
        return A(mu)
    if mult == 3:
        if pattern == (1, 1, 1):
            return D(4) if mu == 4 else unclassified(f"triple point with mu={mu}")
        if pattern == (2, 1):
            return D(mu) if mu >= 5 else unclassified(f"D-like cone with mu={mu}")
        if pattern == (3,):
            named = {6: E6, 7: E7, 8: E8, 10: T236}
            if mu in named:
                return named[mu]
            return unclassified(f"triple tangent with mu={mu}")
    if mult == 4:
        if pattern == (1, 1, 1, 1) and mu == 9:
            return X9
        return unclassified(f"quadruple point, tangent pattern {list(pattern)}, mu={mu}")
    return unclassified(f"multiplicity {mult}")


def classify(g: Poly, point: Optional[ProjPoint] = None) -> SingularityRecord:
    """Classify the germ at the origin by (multiplicity, tangent cone, mu),
    requiring tau = mu for every named type."""
    from .criteria import lct

    _require_singular(g)
    mu = local_milnor(g)
    tau = local_tjurina(g)
    mult = multiplicity(g)
    pattern = tangent_cone_pattern(g)
    stype = _type_from_invariants(mult, pattern, mu)
    if stype.classified and tau != mu:
        stype = unclassified(f"{stype} invariants but tau={tau} != mu={mu}")
    return SingularityRecord(point, mu, tau, mult, pattern, stype,
                             lct(stype) if stype.classified else None)


def analyze_point(f: Poly, p: ProjPoint) -> SingularityRecord:
    """Verify that p is a singular point of f = 0 and classify it."""
    for i, h in enumerate([f] + f.gradient()):
        if h.evaluate(p.coords):
            what = "curve" if i == 0 else "singular locus"
            raise NotOnCurve(f"point {p} is not on the {what}")
    return classify(poly_localize(f, p), p)
