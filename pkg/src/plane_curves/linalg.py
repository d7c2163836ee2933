"""Graded linear algebra: monomial bases, multiplication maps, exact and
modular rank, exact kernels."""
from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np

from .errors import BadPrime, DegreeMismatch
from .field import FieldElement, NumberField
from .poly import Poly

log = logging.getLogger(__name__)

# auto mode switches to the modular engine above this many matrix entries
MODULAR_THRESHOLD = 10_000


@dataclass(frozen=True)
class MonoBasis:
    """Ordered monomials; either one graded piece or everything below a degree."""

    nvars: int
    degree: int
    truncated: bool
    monomials: tuple
    index: dict = dc_field(compare=False, repr=False, hash=False)

    def __len__(self):
        return len(self.monomials)


def _homogeneous_exponents(nvars: int, k: int):
    # lexicographically decreasing, x-heavy monomials first
    out = []
    for combo in combinations_with_replacement(range(nvars), k):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def basis_monomials(nvars: int, degree: int, truncated: bool = False) -> MonoBasis:
    """Basis of the degree-``degree`` graded piece, or with ``truncated`` of all
    monomials of total degree below ``degree`` (graded, low degrees first)."""
    if degree < 0:
        monos = []
    elif truncated:
        monos = [e for k in range(degree) for e in _homogeneous_exponents(nvars, k)]
    else:
        monos = _homogeneous_exponents(nvars, degree)
    return MonoBasis(nvars, degree, truncated, tuple(monos),
                     {e: i for i, e in enumerate(monos)})


class ExactMatrix:
    """Sparse matrix with FieldElement entries (zeros not stored)."""

    def __init__(self, field: NumberField, nrows: int, ncols: int, entries=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        for (i, j), c in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry {(i, j)} outside {nrows}x{ncols}")
            c = field(c)
            if c:
                self.entries[(i, j)] = c

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        ents = {(i, j): c for i, r in enumerate(rows) for j, c in enumerate(r) if c}
        return cls(field, len(rows), ncols, ents)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def size(self):
        return self.nrows * self.ncols

    def __getitem__(self, ij):
        return self.entries.get(ij, self.field.zero)

    def rows(self):
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for (i, j), c in self.entries.items():
            out[i][j] = c
        return out

    def matvec(self, v: Sequence) -> list:
        out = [self.field.zero] * self.nrows
        for (i, j), c in self.entries.items():
            if v[j]:
                out[i] = out[i] + c * v[j]
        return out

    def integer_coordinates(self):
        """Row-scaled integer power-basis coordinates, one object array per
        basis element.  Row scaling by nonzero rationals preserves rank."""
        n = self.field.degree
        arrs = [np.zeros((self.nrows, self.ncols), dtype=object) for _ in range(n)]
        for a in arrs:
            a.fill(0)
        by_row = {}
        for (i, j), c in self.entries.items():
            by_row.setdefault(i, []).append((j, c))
        for i, items in by_row.items():
            den = 1
            for _, c in items:
                for q in c.coords:
                    den = den * q.denominator // math.gcd(den, q.denominator)
            for j, c in items:
                for k, q in enumerate(c.coords):
                    if q:
                        arrs[k][i, j] = q.numerator * (den // q.denominator)
        return arrs


def mulmap_matrix(gens: Sequence[Poly], src_deg, dst_deg: int) -> ExactMatrix:
    """Matrix of (a_1..a_s) -> sum a_i * gens[i] from graded pieces of degree
    ``src_deg`` (one int, or one per generator) to degree ``dst_deg``.

    Columns are ordered generator-major, then by source monomial.
    """
    if isinstance(src_deg, int):
        src_deg = [src_deg] * len(gens)
    if len(src_deg) != len(gens):
        raise DegreeMismatch("need one source degree per generator")
    nv = gens[0].nvars
    fld = gens[0].field
    dst = basis_monomials(nv, dst_deg)
    ents = {}
    col = 0
    for g, r in zip(gens, src_deg):
        if g and (not g.is_homogeneous() or g.degree() + r != dst_deg):
            raise DegreeMismatch(
                f"generator of degree {g.degree()} times degree {r} does not land in degree {dst_deg}")
        src = basis_monomials(nv, r)
        for m in src.monomials:
            for e, c in g.terms.items():
                row = dst.index[tuple(a + b for a, b in zip(e, m))]
                ents[(row, col)] = c
            col += 1
    return ExactMatrix(fld, len(dst), col, ents)


# exact rank: fraction-free elimination over Z[a]

class _IntegralRing:
    """Vectorized arithmetic in Z[a] on lists of coordinate arrays."""

    def __init__(self, fld: NumberField):
        self.field = fld
        self.n = fld.degree
        self.m = [int(c) for c in fld.minpoly]

    @staticmethod
    def supports(fld: NumberField) -> bool:
        return all(c.denominator == 1 for c in fld.minpoly)

    def mul(self, x, y):
        n = self.n
        if n == 1:
            return [x[0] * y[0]]
        prod = [None] * (2 * n - 1)
        for i in range(n):
            for j in range(n):
                t = x[i] * y[j]
                prod[i + j] = t if prod[i + j] is None else prod[i + j] + t
        for k in range(2 * n - 2, n - 1, -1):
            top = prod[k]
            for j in range(n):
                if self.m[j]:
                    prod[k - n + j] = prod[k - n + j] - self.m[j] * top
        return prod[:n]

    def exact_div(self, x, q):
        """x / q for q in Z[a], knowing the quotient is integral."""
        if self.n == 1:
            return [x[0] // q[0]]
        inv = self.field(q).inverse()
        den = 1
        for c in inv.coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        adj = [int(c * den) for c in inv.coords]
        y = self.mul(x, adj)
        return [a // den for a in y]


def _bareiss_rank(arrs, ring: _IntegralRing) -> int:
    n = ring.n
    A = [a.copy() for a in arrs]
    nrows, ncols = A[0].shape
    prev = [1] + [0] * (n - 1)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.zeros(nrows - r, dtype=bool)
        for a in A:
            nz |= (a[r:, c] != 0)
        hits = np.flatnonzero(nz)
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            for a in A:
                a[[r, i], :] = a[[i, r], :]
        piv = [a[r, c] for a in A]
        if r + 1 < nrows and c + 1 < ncols:
            block = [a[r + 1:, c + 1:] for a in A]
            colv = [a[r + 1:, c][:, None] for a in A]
            rowv = [a[r, c + 1:][None, :] for a in A]
            left = ring.mul(block, piv)
            right = ring.mul(colv, rowv)
            new = [lft - rgt for lft, rgt in zip(left, right)]
            new = ring.exact_div(new, prev)
            for a, b in zip(A, new):
                a[r + 1:, c + 1:] = b
        for a in A:
            a[r + 1:, c] = 0
        prev = piv
        r += 1
    return r


def _gauss_rref(M: ExactMatrix):
    """Reduced row echelon form over the field; returns (rows, pivot columns)."""
    rows = [r for r in M.rows() if any(r)]
    pivots = []
    r = 0
    for c in range(M.ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank_exact(M: ExactMatrix) -> int:
    """Rank over the field by fraction-free (Bareiss) elimination."""
    if not M.entries:
        return 0
    if not _IntegralRing.supports(M.field):
        return len(_gauss_rref(M)[1])
    # fewer rows than columns keeps the elimination short
    arrs = M.integer_coordinates()
    if M.nrows > M.ncols:
        arrs = [a.T.copy() for a in arrs]
    return _bareiss_rank(arrs, _IntegralRing(M.field))


def kernel_basis(M: ExactMatrix) -> list:
    """Basis of the right kernel, one vector per non-pivot column, in
    reduced form (1 at its own free column, 0 at the other free columns)."""
    rref, pivots = _gauss_rref(M)
    zero, one = M.field.zero, M.field.one
    pivset = set(pivots)
    basis = []
    for j in range(M.ncols):
        if j in pivset:
            continue
        v = [zero] * M.ncols
        v[j] = one
        for row, pc in zip(rref, pivots):
            if row[j]:
                v[pc] = -row[j]
        basis.append(v)
    return basis


# modular rank

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random, lo: int = 2 ** 30, hi: int = 2 ** 31) -> int:
    while True:
        n = rng.randrange(lo, hi) | 1
        if is_prime(n):
            return n


def _pmod_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod_divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for k, bk in enumerate(b):
            a[shift + k] = (a[shift + k] - c * bk) % p
        a.pop()
        _pmod_trim(a)
    return q, a


def _pmod_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _pmod_trim(out)


def _pmod_gcd(a, b, p):
    a, b = _pmod_trim(list(a)), _pmod_trim(list(b))
    while b:
        a, b = b, _pmod_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _pmod_powmod(base, e, m, p):
    result = [1]
    base = _pmod_divmod(base, m, p)[1]
    while e:
        if e & 1:
            result = _pmod_divmod(_pmod_mul(result, base, p), m, p)[1]
        base = _pmod_divmod(_pmod_mul(base, base, p), m, p)[1]
        e >>= 1
    return result


def roots_mod_p(poly: Sequence[int], p: int, rng: random.Random) -> list:
    """All roots in GF(p) of a polynomial given by coefficients mod p."""
    f = _pmod_trim([c % p for c in poly])
    if len(f) <= 1:
        return []
    # product of the distinct linear factors
    tp = _pmod_powmod([0, 1], p, f, p)
    g = _pmod_gcd(f, _pmod_trim([(a - b) % p for a, b in
                                 zip(tp + [0] * 2, [0, 1] + [0] * len(tp))]), p)
    roots = []
    stack = [g] if len(g) > 1 else []
    while stack:
        h = stack.pop()
        if len(h) == 2:
            roots.append((-h[0]) * pow(h[1], p - 2, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            w = _pmod_powmod([a, 1], (p - 1) // 2, h, p) or [0]
            w[0] = (w[0] - 1) % p
            d = _pmod_gcd(h, _pmod_trim(w), p)
            if 1 < len(d) < len(h):
                stack.append(d)
                stack.append(_pmod_divmod(h, d, p)[0])
                break
    return sorted(roots)


def _specialize(M: ExactMatrix, p: int, root: int) -> np.ndarray:
    """Image of M under a -> root in GF(p), as an int64 array."""
    A = np.zeros((M.nrows, M.ncols), dtype=np.int64)
    powers = [pow(root, k, p) for k in range(M.field.degree)]
    for (i, j), c in M.entries.items():
        acc = 0
        for q, w in zip(c.coords, powers):
            if q:
                if q.denominator % p == 0:
                    raise BadPrime(f"{p} divides a denominator")
                acc += q.numerator % p * pow(q.denominator, p - 2, p) * w
        A[i, j] = acc % p
    return A


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank of an int64 matrix over GF(p); requires p < 2^31."""
    A = A.copy() % p
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hits = np.flatnonzero(A[r:, c])
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            A[[r, i], :] = A[[i, r], :]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = A[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            A[below, c:] = (A[below, c:] - A[below, c, None] * A[r, None, c:]) % p
        r += 1
    return r


def rank_modular(M: ExactMatrix, primes: int = 3, seed=None, prime_list=None) -> int:
    """Lower bound for the rank: the maximum over several random primes p of
    the rank of M specialized at a root of the minimal polynomial mod p.

    Primes where the minimal polynomial has no root, or which divide a
    denominator, are skipped and replaced.
    """
    if primes < 1:
        raise ValueError("need at least one prime")
    rng = random.Random(seed)
    queue = list(prime_list) if prime_list is not None else None
    best = 0
    used = tries = 0
    while used < primes:
        tries += 1
        if tries > 50 * primes:
            raise BadPrime("could not find usable primes")
        if queue is not None:
            if not queue:
                break
            p = queue.pop(0)
        else:
            p = random_prime(rng)
        try:
            mp = []
            for c in M.field.minpoly:
                if c.denominator % p == 0:
                    raise BadPrime(f"{p} divides the minimal polynomial")
                mp.append(c.numerator * pow(c.denominator, p - 2, p) % p)
            roots = roots_mod_p(mp, p, rng)
            if not roots:
                raise BadPrime(f"minimal polynomial has no root mod {p}")
            A = _specialize(M, p, roots[0])
        except BadPrime as exc:
            log.debug("skipping prime: %s", exc)
            continue
        best = max(best, rank_mod_p(A, p))
        used += 1
        if best == min(M.nrows, M.ncols):
            break
    return best


def matrix_rank(M: ExactMatrix, mode: str = "auto", primes: int = 3, seed=None) -> int:
    """Dispatch: ``exact``, ``modular``, or ``auto`` (modular above
    :data:`MODULAR_THRESHOLD` entries)."""
    if mode == "exact" or (mode == "auto" and M.size <= MODULAR_THRESHOLD):
        return rank_exact(M)
    if mode not in ("auto", "modular"):
        raise ValueError(f"unknown rank mode {mode!r}")
    return rank_modular(M, primes=primes, seed=seed)
