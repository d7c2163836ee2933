"""Exact arithmetic in Q and in simple extensions Q[t]/(p(t)).

Elements are stored densely in the power basis 1, a, ..., a^(n-1) with
``Fraction`` coordinates, so equality is coordinate-wise.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Sequence

from . import univariate as up
from .errors import DivisionByZero, NonMonic, NotSquarefree, ZeroDivisor


class NumberField:
    """Q(a) with a a root of a monic squarefree ``minpoly`` (lowest degree first).

    Irreducibility is assumed; a reducible minpoly shows up as
    :class:`ZeroDivisor` when inverting.
    """

    def __init__(self, minpoly: Sequence, name: str = "a"):
        coeffs = [Fraction(c) for c in minpoly]
        coeffs = up.strip(coeffs)
        if len(coeffs) < 2:
            raise NonMonic(f"minimal polynomial must have degree >= 1, got {minpoly!r}")
        if coeffs[-1] != 1:
            raise NonMonic(f"minimal polynomial is not monic: {minpoly!r}")
        if len(coeffs) > 2 and not up.is_squarefree(coeffs):
            raise NotSquarefree(f"minimal polynomial {minpoly!r} has a repeated factor")
        self.minpoly = tuple(coeffs)
        self.name = name
        self.degree = len(coeffs) - 1
        n = self.degree
        # power-basis coordinates of a^k for n <= k <= 2n-2
        self._reduce = {}
        cur = [-c for c in coeffs[:-1]]  # a^n
        for k in range(n, 2 * n - 1):
            self._reduce[k] = tuple(cur)
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [cur[j] - top * coeffs[j] for j in range(n)]
        self.zero = FieldElement(self, (Fraction(0),) * n)
        self.one = self((1,))
        self.gen = self((0, 1)) if n > 1 else self((-coeffs[0],))

    def __call__(self, value) -> "FieldElement":
        """Coerce an integer, Fraction, coordinate sequence or element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, Rational)):
            return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))
        coords = [Fraction(c) for c in value]
        if len(coords) > self.degree:
            return self.from_poly(coords)
        coords += [Fraction(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    def from_poly(self, coeffs) -> "FieldElement":
        """Reduce an arbitrary polynomial in the generator modulo the minpoly."""
        _, r = up.divmod_poly([Fraction(c) for c in coeffs], list(self.minpoly))
        r = list(r) + [Fraction(0)] * (self.degree - len(r))
        return FieldElement(self, tuple(r))

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __eq__(self, other):
        if not isinstance(other, NumberField) or self.minpoly != other.minpoly:
            return False
        return self.is_rational or self.name == other.name

    def __hash__(self):
        return hash((self.minpoly, None if self.is_rational else self.name))

    def __repr__(self):
        if self.is_rational:
            return "QQ"
        return f"NumberField({self.name}: {_upoly_str(self.minpoly, 't')} = 0)"

    def describe(self) -> str:
        if self.is_rational:
            return "Q"
        return f"Q({self.name}) minpoly: {_upoly_str(self.minpoly, 't')}"

    def __reduce__(self):
        return (NumberField, (self.minpoly, self.name))


def field_make(minpoly: Sequence, name: str = "a") -> NumberField:
    return NumberField(minpoly, name)


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, (int, Rational)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return FieldElement(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.field.degree
        if n == 1:
            return FieldElement(self.field, (self.coords[0] * other.coords[0],))
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                red = self.field._reduce[k]
                for j in range(n):
                    out[j] += c * red[j]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("inverse of zero")
        n = self.field.degree
        if n == 1:
            return FieldElement(self.field, (1 / self.coords[0],))
        g, s, _ = up.ext_gcd(list(self.coords), list(self.field.minpoly))
        if up.degree(g) > 0:
            raise ZeroDivisor(
                f"{self} is a zero divisor; gcd with minpoly is {_upoly_str(g, 't')}", g)
        return self.field(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return FieldElement(self.field, tuple(a / other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coords == other.coords and self.field == other.field
        if isinstance(other, (int, Rational)):
            return self.coords[0] == other and not any(self.coords[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        name = self.field.name
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
            parts.append((c, mono))
        if not parts:
            return "0"
        out = ""
        for idx, (c, mono) in enumerate(parts):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if idx == 0:
                out = body if sign == "+" else "-" + body
            else:
                out += f" {sign} {body}"
        return out

    def __reduce__(self):
        return (FieldElement, (self.field, self.coords))


def _upoly_str(coeffs, var: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


QQ = NumberField([0, 1], "a")
