"""Global invariants of a plane curve f = 0: the Milnor algebra Hilbert
function, total Tjurina number, mdr and the freeness test."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .errors import NoStabilization, NotFoundBelowDegree, OutOfRange, ZeroGradient
from .linalg import basis_monomials, kernel_basis, matrix_rank, mulmap_matrix
from .poly import Poly


@dataclass
class GlobalInvariants:
    degree: int
    tau: int
    mdr: int
    free: bool
    exponents: Optional[tuple] = None
    hilbert_trace: list = field(default_factory=list)
    ar_kernel_dim: int = 0

    def to_dict(self):
        return {
            "degree": self.degree,
            "tau": self.tau,
            "mdr": self.mdr,
            "free": self.free,
            "exponents": list(self.exponents) if self.exponents else None,
            "hilbert_trace": [list(kv) for kv in self.hilbert_trace],
            "ar_kernel_dim": self.ar_kernel_dim,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["degree"], d["tau"], d["mdr"], d["free"],
                   tuple(d["exponents"]) if d["exponents"] else None,
                   [tuple(kv) for kv in d["hilbert_trace"]], d.get("ar_kernel_dim", 0))


def _partials(f: Poly):
    if f.degree() < 2:
        raise ValueError("curve degree must be at least 2")
    grad = f.gradient()
    if not any(grad):
        raise ZeroGradient("all partial derivatives vanish")
    return grad


def milnor_hilbert_dim(f: Poly, k: int, mode: str = "auto") -> int:
    """dim of the degree-k piece of S / (f_x, f_y, f_z)."""
    grad = _partials(f)
    d = f.degree()
    dim_sk = comb(k + 2, 2)
    src = k - d + 1
    if src < 0:
        return dim_sk
    return dim_sk - matrix_rank(mulmap_matrix(grad, src, k), mode)


def total_tjurina(f: Poly, mode: str = "auto", trace: list = None) -> int:
    """Stable value of the Milnor algebra Hilbert function.

    Starts at k = 3(d-2) and stops at the first two consecutive equal values;
    the computed (k, dim) pairs are appended to ``trace``.
    """
    d = f.degree()
    start = 3 * (d - 2)
    cap = start + d
    if trace is None:
        trace = []
    prev = None
    for k in range(start, cap + 1):
        val = milnor_hilbert_dim(f, k, mode)
        trace.append((k, val))
        if prev is not None and val == prev:
            return val
        prev = val
    raise NoStabilization(f"Hilbert function not stable up to degree {cap}: {trace}")


def ar_kernel_dim(f: Poly, r: int, mode: str = "auto") -> int:
    """dim AR(f)_r: Jacobian relations (a, b, c) of degree r, Koszul ones included."""
    grad = _partials(f)
    M = mulmap_matrix(grad, r, r + f.degree() - 1)
    return M.ncols - matrix_rank(M, mode)


def ar_relations(f: Poly, r: int) -> list:
    """Exact basis of AR(f)_r as triples of polynomials."""
    grad = _partials(f)
    M = mulmap_matrix(grad, r, r + f.degree() - 1)
    src = basis_monomials(3, r)
    out = []
    for v in kernel_basis(M):
        triple = []
        for g in range(3):
            terms = {m: v[g * len(src) + i] for i, m in enumerate(src.monomials)}
            triple.append(Poly(f.field, f.vars, terms))
        out.append(tuple(triple))
    return out


def mdr(f: Poly, mode: str = "auto"):
    """Smallest r with a nonzero Jacobian relation of degree r; returns
    ``(r, dim AR(f)_r)``."""
    d = f.degree()
    for r in range(d):
        kd = ar_kernel_dim(f, r, mode)
        if kd:
            return r, kd
    raise NotFoundBelowDegree(f"no Jacobian relation up to degree {d - 1}")


def free_defect(d: int, tau: int, r: int) -> int:
    """(d-1)^2 - r(d-r-1) - tau; zero exactly for free curves."""
    return (d - 1) ** 2 - r * (d - r - 1) - tau


def freeness(f: Poly, mode: str = "auto") -> GlobalInvariants:
    d = f.degree()
    trace = []
    tau = total_tjurina(f, mode, trace)
    r, kd = mdr(f, mode)
    free = free_defect(d, tau, r) == 0
    return GlobalInvariants(d, tau, r, free, (r, d - 1 - r) if free else None, trace, kd)


def tau_max(d: int, r: int) -> int:
    """Upper bound for the total Tjurina number of a degree-d curve with mdr r."""
    if not 0 <= r <= d - 1:
        raise OutOfRange(f"mdr {r} outside [0, {d - 1}]")
    val = (d - 1) * (d - r - 1) + r * r
    if 2 * r >= d:
        val -= comb(2 * r - d + 2, 2)
    return val
