"""Line arrangements: intersection lattice, weak combinatorics and the
combinatorial screening identities for M-line arrangements."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .criteria import NotApplicable, m_curve_mdr_target, m_curve_tau_target
from .errors import InputError, MalformedTuple, ProportionalLines
from .poly import Poly, ProjPoint, product
from .stypes import X9, A, D, SingularityType, unclassified


def _coeffs(line: Poly):
    if not line or line.degree() != 1 or not line.is_homogeneous():
        raise InputError(f"{line} is not a linear form")
    return [line.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]]


class LineArrangement:
    def __init__(self, lines: Sequence[Poly]):
        self.lines = list(lines)
        self._coeffs = [_coeffs(l) for l in self.lines]
        for i in range(len(self.lines)):
            for j in range(i):
                if not any(_cross(self._coeffs[i], self._coeffs[j])):
                    raise ProportionalLines(
                        f"lines {self.lines[j]} and {self.lines[i]} are proportional")

    @property
    def field(self):
        return self.lines[0].field

    def __len__(self):
        return len(self.lines)

    def polynomial(self) -> Poly:
        return product(self.lines)


@dataclass
class WeakCombinatorics:
    d: int
    tk: dict = field(default_factory=dict)

    def t(self, k: int) -> int:
        return self.tk.get(k, 0)

    @property
    def n2(self):
        return self.t(2)

    @property
    def n3(self):
        return self.t(3)

    @property
    def n4(self):
        return self.t(4)

    def as_tuple(self):
        top = max(self.tk, default=2)
        return (self.d,) + tuple(self.t(k) for k in range(2, max(top, 4) + 1))

    def __str__(self):
        return " ".join(str(v) for v in self.as_tuple())


def intersection_lattice(arr: LineArrangement):
    """All intersection points with the number of lines through each, and
    the tally t_k of k-fold points."""
    if len(arr) < 2:
        raise InputError("need at least two lines")
    seen = {}
    cs = arr._coeffs
    for i in range(len(cs)):
        for j in range(i):
            p = ProjPoint(_cross(cs[i], cs[j]))
            if p not in seen:
                seen[p] = sum(1 for c in cs
                              if not (c[0] * p.coords[0] + c[1] * p.coords[1] + c[2] * p.coords[2]))
    points = sorted(seen.items(), key=lambda kv: (-kv[1], str(kv[0])))
    tk = {}
    for _, k in points:
        tk[k] = tk.get(k, 0) + 1
    return points, WeakCombinatorics(len(arr), dict(sorted(tk.items())))


def naive_count_check(wc: WeakCombinatorics) -> bool:
    """Every pair of lines meets exactly once: sum (k^2-k) t_k = d^2 - d."""
    return sum((k * k - k) * t for k, t in wc.tk.items()) == wc.d * wc.d - wc.d


class CmResult(str, Enum):
    PASSES = "passes"
    FAILS = "fails"


def cm_lhs(wc: WeakCombinatorics) -> int:
    return wc.n2 + 2 * wc.n3 + 3 * wc.n4


def cm_rhs(d: int) -> int:
    m = d // 2
    return m * m + 2 * m - 1 if d % 2 else m * m + m - 3


def cm_check(wc: WeakCombinatorics):
    """Necessary condition for an M-line arrangement (n2 + 2n3 + 3n4 identity)."""
    if wc.d < 5:
        return NotApplicable("fewer than 5 lines")
    if wc.d % 2 == 0 and wc.d < 6:
        return NotApplicable("even degree below 6")
    high = [k for k, t in wc.tk.items() if k >= 5 and t]
    if high:
        return NotApplicable(f"points of multiplicity {max(high)} are neither ADE nor SE")
    return CmResult.PASSES if cm_lhs(wc) == cm_rhs(wc.d) else CmResult.FAILS


def tau_from_combinatorics(wc: WeakCombinatorics) -> int:
    return sum((k - 1) ** 2 * t for k, t in wc.tk.items())


def ordinary_type_map(k: int) -> SingularityType:
    """Type of an ordinary k-fold point (k pairwise transversal smooth branches)."""
    if k < 2:
        raise ValueError("incidence count must be >= 2")
    if k == 2:
        return A(1)
    if k == 3:
        return D(4)
    if k == 4:
        return X9
    return unclassified(f"ordinary {k}-fold point out of scope")


def parse_tuple(text: str) -> WeakCombinatorics:
    """``d t2 t3 t4 ...``"""
    parts = text.replace(",", " ").replace(";", " ").split()
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise MalformedTuple(f"non-integer entry in {text!r}") from None
    if len(vals) < 2 or any(v < 0 for v in vals) or vals[0] < 1:
        raise MalformedTuple(f"expected 'd t2 t3 ...' with nonnegative entries, got {text!r}")
    tk = {k: t for k, t in enumerate(vals[1:], start=2) if t}
    return WeakCombinatorics(vals[0], tk)


def screen(wc: WeakCombinatorics) -> dict:
    """Screening record for one tuple."""
    d = wc.d
    cm = cm_check(wc)
    out = {
        "tuple": list(wc.as_tuple()),
        "d": d,
        "naive_count": naive_count_check(wc),
        "cm_check": cm.value if isinstance(cm, CmResult) else {"not_applicable": cm.reason},
        "candidate": cm is CmResult.PASSES and naive_count_check(wc),
        "tau": tau_from_combinatorics(wc),
    }
    if d >= 4:
        d1 = m_curve_mdr_target(d)
        out["target_exponents"] = [d1, d - 1 - d1]
        out["target_tau"] = m_curve_tau_target(d)
        out["tau_matches_target"] = out["tau"] == out["target_tau"]
    return out
