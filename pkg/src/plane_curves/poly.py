"""Sparse multivariate polynomials over a NumberField, their text parser,
charts at projective points and a Monte Carlo reducedness test."""
from __future__ import annotations

import random
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from . import univariate as up
from .errors import (DegenerateRestriction, InhomogeneousInput, InputError,
                     PolySyntaxError, UnknownSymbol)
from .field import QQ, FieldElement, NumberField

XYZ = ("x", "y", "z")
XY = ("x", "y")


class Poly:
    """Polynomial stored as ``{exponent tuple: nonzero FieldElement}``.

    Homogeneous curve equations use variables ``x, y, z``; local germs at
    a chart origin use ``x, y``.
    """

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: NumberField, variables: Sequence[str], terms=None):
        self.field = field
        self.vars = tuple(variables)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = field(c)

    # construction helpers

    @classmethod
    def constant(cls, field, variables, c):
        return cls(field, variables, {(0,) * len(variables): field(c)})

    @classmethod
    def variable(cls, field, variables, i):
        e = [0] * len(variables)
        e[i] = 1
        return cls(field, variables, {tuple(e): field.one})

    def _raw(self, terms):
        p = Poly.__new__(Poly)
        p.field, p.vars, p.terms = self.field, self.vars, terms
        return p

    @property
    def nvars(self) -> int:
        return len(self.vars)

    # arithmetic

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Rational, FieldElement)):
            return Poly.constant(self.field, self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, FieldElement)):
            if not other:
                return self._raw({})
            return self._raw({e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return self._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.degree() != 0:
                raise ValueError("only division by constants is supported")
            other = other.terms[(0,) * self.nvars]
        inv = self.field(1) / other
        return self * inv

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.field, self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Rational, FieldElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # structure

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin)."""
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, k: int) -> "Poly":
        return self._raw({e: c for e, c in self.terms.items() if sum(e) == k})

    def truncate(self, n: int) -> "Poly":
        """Drop all terms of total degree >= n."""
        return self._raw({e: c for e, c in self.terms.items() if sum(e) < n})

    def coefficient(self, exps) -> FieldElement:
        return self.terms.get(tuple(exps), self.field.zero)

    def constant_term(self) -> FieldElement:
        return self.coefficient((0,) * self.nvars)

    def sorted_terms(self):
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def diff(self, var) -> "Poly":
        i = self.vars.index(var) if isinstance(var, str) else var
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return self._raw(out)

    def gradient(self):
        return [self.diff(i) for i in range(self.nvars)]

    def evaluate(self, values: Sequence) -> FieldElement:
        values = [self.field(v) for v in values]
        cache = [dict() for _ in values]
        acc = self.field.zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    pw = cache[i].get(k)
                    if pw is None:
                        pw = values[i] ** k
                        cache[i][k] = pw
                    term = term * pw
            acc = acc + term
        return acc

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Compose: replace variable i by ``images[i]`` (all sharing variables)."""
        target = images[0]
        cache = [{0: Poly.constant(self.field, target.vars, 1)} for _ in images]

        def power(i, k):
            got = cache[i].get(k)
            if got is None:
                got = power(i, k - 1) * images[i]
                cache[i][k] = got
            return got

        out = {}
        for e, c in self.terms.items():
            term = Poly.constant(self.field, target.vars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for e2, c2 in term.terms.items():
                s = out.get(e2)
                out[e2] = c2 if s is None else s + c2
        return Poly(self.field, target.vars, out)

    # printing

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            pieces.append(_signed_term(c, mono))
        out = pieces[0][1] if pieces[0][0] == "+" else "-" + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"

    def __reduce__(self):
        return (Poly, (self.field, self.vars, self.terms))


def _signed_term(c: FieldElement, mono: str):
    if c.is_rational():
        q = c.coords[0]
        sign = "-" if q < 0 else "+"
        mag = abs(q)
        if mono:
            return sign, mono if mag == 1 else f"{mag}*{mono}"
        return sign, str(mag)
    s = str(c)
    single = " + " not in s and " - " not in s[1:]
    if single:
        sign = "-" if s.startswith("-") else "+"
        body = s.lstrip("-")
    else:
        sign, body = "+", f"({s})"
    return sign, f"{body}*{mono}" if mono else body


class ProjPoint:
    """Point of P^2, scaled so its first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[FieldElement]):
        coords = list(coords)
        if len(coords) != 3:
            raise ValueError("projective points have three coordinates")
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        self.coords = tuple(c / lead for c in coords)

    @property
    def field(self):
        return self.coords[0].field

    @property
    def chart(self) -> int:
        return next(i for i, c in enumerate(self.coords) if c)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


def poly_localize(f: Poly, p: ProjPoint) -> Poly:
    """Dehomogenize in the chart of the first nonzero coordinate of ``p`` and
    move ``p`` to the origin; the result is in variables ``x, y``."""
    j = p.chart
    others = [i for i in range(3) if i != j]
    field = f.field
    x = Poly.variable(field, XY, 0)
    y = Poly.variable(field, XY, 1)
    images = [None] * 3
    images[j] = Poly.constant(field, XY, 1)
    images[others[0]] = x + p.coords[others[0]]
    images[others[1]] = y + p.coords[others[1]]
    return f.substitute(images)


def poly_diff(f: Poly, var) -> Poly:
    return f.diff(var)


def restrict_to_line(f: Poly, p0: Sequence, p1: Sequence) -> list:
    """Coefficients (by power of s) of f(s*p0 + p1), i.e. the binary form
    f(s*p0 + t*p1) dehomogenized at t = 1."""
    field = f.field
    s = Poly.variable(field, ("s",), 0)
    images = [s * field(a) + field(b) for a, b in zip(p0, p1)]
    g = f.substitute(images)
    return up.strip([g.coefficient((k,)) for k in range(f.degree() + 1)])


def poly_squarefree_check(f: Poly, trials: int = 3, seed=None,
                          max_attempts: int = 50) -> bool:
    """Monte Carlo reducedness test via restrictions to random lines.

    A squarefree restriction proves ``f`` has no repeated factor, so ``True``
    is certain; ``False`` means every tried line gave a repeated root.
    """
    if not f:
        raise ValueError("zero polynomial")
    d = f.degree()
    if d <= 1:
        return True
    rng = random.Random(seed)
    done = attempts = 0
    while done < trials:
        attempts += 1
        if attempts > max_attempts:
            raise DegenerateRestriction(
                f"all {max_attempts} random lines lie on the curve")
        p0 = [rng.randint(-20, 20) for _ in range(3)]
        p1 = [rng.randint(-20, 20) for _ in range(3)]
        g = restrict_to_line(f, p0, p1)
        if not g:
            continue
        done += 1
        # roots at t = 0 (s = infinity) are the drop in degree
        if d - up.degree(g) <= 1 and up.is_squarefree(g):
            return True
    return False


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            ws = len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[pos + ws]!r}", pos + ws, text)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("id", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, field, variables):
        self.text = text
        self.field = field
        self.vars = tuple(variables)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            q = self.unary()
            if tok[1] == "*":
                p = p * q
            else:
                if q.degree() != 0:
                    self.fail("division only by nonzero constants", tok)
                p = p / q
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a nonnegative integer", tok)
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Poly.constant(self.field, self.vars, val)
        if kind == "id":
            if val in self.vars:
                return Poly.variable(self.field, self.vars, self.vars.index(val))
            if not self.field.is_rational and val == self.field.name:
                return Poly.constant(self.field, self.vars, self.field.gen)
            raise UnknownSymbol(f"unknown symbol {val!r} at position {pos}")
        if kind == "op" and val == "(":
            p = self.expr()
            if self.take()[1] != ")":
                self.fail("expected ')'", self.toks[self.i - 1])
            return p
        self.fail("unexpected " + ("end of input" if kind == "end" else repr(val)), tok)


def parse_expr(text: str, field: NumberField = QQ, variables: Sequence[str] = XYZ) -> Poly:
    """Parse any polynomial expression (no homogeneity requirement)."""
    return _Parser(text, field, variables).parse()


def poly_parse(text: str, field: NumberField = QQ, variables: Sequence[str] = XYZ) -> Poly:
    """Parse a homogeneous polynomial in ``variables``."""
    p = parse_expr(text, field, variables)
    if not p.is_homogeneous():
        degs = sorted({sum(e) for e in p.terms})
        raise InhomogeneousInput(f"polynomial is not homogeneous (term degrees {degs})")
    return p


def parse_constant(text: str, field: NumberField) -> FieldElement:
    p = parse_expr(text, field, ())
    return p.constant_term()


def parse_point(text: str, field: NumberField) -> ProjPoint:
    """Parse ``(a:b:c)`` with field-expression coordinates."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise PolySyntaxError(f"point must look like (a:b:c), got {text!r}")
    parts = s[1:-1].split(":")
    if len(parts) != 3:
        raise PolySyntaxError(f"point needs three coordinates, got {text!r}")
    try:
        return ProjPoint([parse_constant(c, field) for c in parts])
    except InputError:
        raise
    except ValueError as exc:
        raise PolySyntaxError(str(exc)) from exc


def product(polys: Iterable[Poly]) -> Poly:
    it = iter(polys)
    acc = next(it)
    for p in it:
        acc = acc * p
    return acc
