import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from plane_curves.errors import InhomogeneousInput, PolySyntaxError, UnknownSymbol
from plane_curves.field import QQ
from plane_curves.poly import (XY, Poly, ProjPoint, parse_expr, parse_point,
                               poly_diff, poly_localize, poly_parse,
                               poly_squarefree_check)

from conftest import QE, QI

SEXTIC = "(x^2+y^2+z^2)^3 - 27*x^2*y^2*z^2"
DEG9 = f"x*y*z*({SEXTIC})"


def test_parse_monomial():
    f = poly_parse("x*y*z")
    assert f.terms == {(1, 1, 1): QQ.one}
    assert f.degree() == 3


def test_parse_sextic_matches_sympy_expansion():
    f = poly_parse(SEXTIC)
    x, y, z = sp.symbols("x y z")
    ref = sp.Poly(sp.expand((x**2 + y**2 + z**2) ** 3 - 27 * x**2 * y**2 * z**2), x, y, z)
    assert len(f.terms) == len(ref.terms()) == 10
    for mono, c in ref.terms():
        assert f.coefficient(mono) == int(c)
    assert f.coefficient((2, 2, 2)) == -21
    assert f.degree() == 6


def test_parse_generator_coefficients():
    f = poly_parse("x + e*y + e*z", QE)
    assert len(f.terms) == 3
    assert f.coefficient((0, 1, 0)) == QE.gen
    assert f.coefficient((1, 0, 0)) == 1


def test_parse_errors():
    with pytest.raises(InhomogeneousInput):
        poly_parse("x^2 + y")
    with pytest.raises(UnknownSymbol):
        poly_parse("x + w")
    with pytest.raises(UnknownSymbol):
        poly_parse("x + e*y")  # e is not a symbol over Q
    with pytest.raises(PolySyntaxError) as info:
        poly_parse("x + * y")
    assert info.value.pos == 4
    with pytest.raises(PolySyntaxError):
        poly_parse("(x + y")
    with pytest.raises(PolySyntaxError):
        poly_parse("x ^ y")
    with pytest.raises(PolySyntaxError):
        poly_parse("x $ y")
    with pytest.raises(PolySyntaxError):
        poly_parse("x / y")


def test_parse_rational_constants():
    assert parse_expr("x/2 + 1/3*y", QQ).coefficient((0, 1, 0)) == Fraction(1, 3)
    p = parse_point("(1:1/2:-1/2)", QQ)
    assert p.coords[1] == Fraction(1, 2)


def test_derivatives():
    assert poly_diff(poly_parse("x*y*z"), "x") == poly_parse("y*z")
    assert poly_diff(poly_parse("x^2*y^2*z^2"), "x") == poly_parse("2*x*y^2*z^2")
    dy = poly_diff(poly_parse(DEG9, QI), "y")
    assert dy.is_homogeneous() and dy.degree() == 8


@pytest.mark.parametrize("text,fld", [
    ("x*y*z", QQ), (SEXTIC, QQ), (DEG9, QI),
    ("x*y*z*(x+y+e*z)*(e^2*x+y+z)", QE),
])
def test_euler_relation(text, fld):
    f = poly_parse(text, fld)
    d = f.degree()
    lhs = sum((Poly.variable(fld, f.vars, i) * f.diff(i) for i in range(3)),
              Poly(fld, f.vars))
    assert lhs == f * d


def test_localize_examples():
    f = poly_parse("x*y*z")
    assert poly_localize(f, parse_point("(0:0:1)", QQ)) == parse_expr("x*y", QQ, XY)
    g = poly_localize(f, parse_point("(1:1:1)", QQ))
    assert g == parse_expr("(1+x)*(1+y)", QQ, XY)
    assert g.constant_term() == 1


def test_localize_degree9_at_e7_point():
    f = poly_parse(DEG9, QI)
    g = poly_localize(f, parse_point("(1:0:i)", QI))
    assert g.constant_term() == 0
    assert g.order() == 3


@settings(max_examples=40)
@given(st.lists(st.integers(-6, 6), min_size=6, max_size=6))
def test_localize_constant_term_is_value(c):
    p_coords = [QI([c[0], c[1]]), QI([c[2], c[3]]), QI([c[4], c[5]])]
    if not any(p_coords):
        return
    p = ProjPoint(p_coords)
    f = poly_parse(DEG9, QI)
    assert poly_localize(f, p).constant_term() == f.evaluate(p.coords)


@pytest.mark.parametrize("text,fld", [
    ("x*y*z", QQ), (SEXTIC, QQ), (DEG9, QI), ("(e*x + y + z)^2*x - 5*x^3 + y*z^2", QE),
    ("x^3 - 1/2*x*y*z + 7*y^3", QQ),
])
def test_print_parse_roundtrip(text, fld):
    f = poly_parse(text, fld)
    assert poly_parse(str(f), fld) == f


def test_canonical_order_is_graded_lex():
    f = poly_parse("z^2 + y*z + x*z + y^2 + x*y + x^2")
    assert str(f) == "x^2 + x*y + x*z + y^2 + y*z + z^2"


@pytest.mark.parametrize("text,fld,expected", [
    ("x^2*y", QQ, False),
    ("x*y*z", QQ, True),
    (DEG9, QI, True),
    ("(x^2+y^2)^2*z", QQ, False),
    ("(x+e*y)^2*(x+y+z)", QE, False),
    ("x^4 + y^4 + 4*x^2*y^2", QQ, True),
])
def test_squarefree_check(text, fld, expected):
    assert poly_squarefree_check(poly_parse(text, fld), seed=7) is expected


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_squarefree_never_accepts_a_square(seed):
    rng = random.Random(seed)
    lin = poly_parse(f"{rng.randint(1, 9)}*x + {rng.randint(-9, 9)}*y + {rng.randint(-9, 9)}*z")
    f = lin * lin * poly_parse("x*y + z^2")
    assert not poly_squarefree_check(f, seed=seed)
