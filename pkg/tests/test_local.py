import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from plane_curves.errors import NonIsolated, NotOnCurve, NotSingular
from plane_curves.field import QQ, field_make
from plane_curves.local import (analyze_point, classify, jet_quotient_dim, local_milnor,
                                local_tjurina, multiplicity, tangent_cone_pattern)
from plane_curves.poly import XY, Poly, parse_expr, parse_point, poly_parse, poly_squarefree_check
from plane_curves.stypes import E6, E7, E8, T236, X9, A, D, SingularityType

from oracles import X, Y, sympy_jet_dim, sympy_milnor, sympy_tjurina


def germ(text, field=QQ):
    return parse_expr(text, field, XY)


NORMAL_FORMS = (
    [(f"x^2 + y^{k + 1}", A(k), k) for k in range(1, 11)]
    + [(f"y^2*x + x^{k - 1}", D(k), k) for k in range(4, 9)]
    + [("x^3 + y^4", E6, 6), ("x^3 + x*y^3", E7, 7), ("x^3 + y^5", E8, 8)]
    + [(f"x^4 + y^4 + {a}*x^2*y^2", X9, 9) for a in (0, 1, 5)]
    + [(f"x^3 + y^6 + {a}*x^2*y^2", T236, 10) for a in (0, 1)]
)
NF_IDS = [f"{t}:{s}" for s, t, _ in NORMAL_FORMS]


def random_linear_change(g, rng):
    while True:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c:
            break
    x = Poly.variable(g.field, XY, 0)
    y = Poly.variable(g.field, XY, 1)
    return g.substitute([x * a + y * b, x * c + y * d])


def test_jet_examples():
    assert all(jet_quotient_dim([germ("y"), germ("x")], N) == 1 for N in range(1, 6))
    assert jet_quotient_dim([germ("2*x"), germ("3*y^2")], 3) == 2
    assert jet_quotient_dim([germ("y^2 + 3*x^2"), germ("2*x*y")], 4) == 4


def test_jet_examples_match_oracle():
    assert sympy_jet_dim([2 * X, 3 * Y ** 2], 3) == 2
    assert sympy_jet_dim([Y ** 2 + 3 * X ** 2, 2 * X * Y], 4) == 4


def test_milnor_tjurina_examples():
    assert local_milnor(germ("x*y")) == local_tjurina(germ("x*y")) == 1
    assert local_milnor(germ("x^2 + y^3")) == 2
    assert local_milnor(germ("x^4 + y^4 + x^2*y^2")) == 9
    assert local_tjurina(germ("x^3 + x^2*y^2 + y^6")) == 10


def test_multiplicity_and_tangent_cone():
    assert multiplicity(germ("x*y")) == 2
    assert multiplicity(germ("y^2*x + x^3")) == 3
    assert multiplicity(germ("x^4 + y^4 + x^2*y^2")) == 4
    assert tangent_cone_pattern(germ("x*y")) == (1, 1)
    assert tangent_cone_pattern(germ("y^2*x + x^4")) == (2, 1)
    assert tangent_cone_pattern(germ("x^3 + y^4")) == (3,)
    assert tangent_cone_pattern(germ("y^3 + x^4")) == (3,)
    # irreducible over Q, two distinct tangents over C
    assert tangent_cone_pattern(germ("x^2 + y^2 + x^3")) == (1, 1)
    assert tangent_cone_pattern(germ("(x^2 + y^2)^2 + x^5")) == (2, 2)


@pytest.mark.parametrize("text,stype,mu", NORMAL_FORMS, ids=NF_IDS)
def test_normal_form_classification(text, stype, mu):
    rec = classify(germ(text))
    assert rec.stype == stype
    assert rec.mu == rec.tau == mu
    assert sum(rec.tc_pattern) == rec.mult


@pytest.mark.parametrize("text,stype,mu", NORMAL_FORMS, ids=NF_IDS)
def test_normal_form_jets_match_sympy_oracle(text, stype, mu):
    expr = sp.sympify(text.replace("^", "**"), locals={"x": X, "y": Y})
    assert sympy_milnor(expr) == mu
    assert sympy_tjurina(expr) == mu
    g = germ(text)
    gens = [g.diff(0), g.diff(1)]
    sgens = [sp.diff(expr, X), sp.diff(expr, Y)]
    for N in range(1, mu + 3):
        assert jet_quotient_dim(gens, N) == sympy_jet_dim(sgens, N)


@pytest.mark.parametrize("text,stype,mu", NORMAL_FORMS, ids=NF_IDS)
def test_classification_survives_coordinate_changes(text, stype, mu):
    rng = random.Random(hash(text) & 0xFFFF)
    g = germ(text)
    for _ in range(3):
        rec = classify(random_linear_change(g, rng))
        assert rec.stype == stype and rec.mu == rec.tau == mu


@pytest.mark.parametrize("text", ["x^2 + y^5", "y^2*x + x^6", "x^3 + x*y^3", "x^4 + y^4 + x^2*y^2"])
def test_jet_dimension_monotone_then_constant(text):
    g = germ(text)
    gens = [g.diff(0), g.diff(1)]
    dims = [jet_quotient_dim(gens, N) for N in range(1, 16)]
    assert all(a <= b for a, b in zip(dims, dims[1:]))
    mu = local_milnor(g)
    first = dims.index(mu)
    assert dims[first:first + 4] == [mu] * 4


def test_non_quasihomogeneous_germ_is_unclassified():
    # tau < mu: a germ outside the quasi-homogeneous list
    rec = classify(germ("x^4 + y^5 + x^2*y^3"))
    assert rec.tau < rec.mu and not rec.stype.classified


def test_five_fold_point_is_unclassified():
    rec = classify(germ("x^5 + y^5"))
    assert rec.mult == 5 and not rec.stype.classified and rec.lct is None


def test_degenerate_x9_is_nonreduced():
    for a in (2, -2):
        assert not poly_squarefree_check(poly_parse(f"x^4 + y^4 + {a}*x^2*y^2"), seed=1)
        with pytest.raises(NonIsolated):
            local_milnor(germ(f"x^4 + y^4 + {a}*x^2*y^2"))


def test_x9_parameter_four_is_reduced():
    # x^4 + 4x^2y^2 + y^4 has four distinct tangents (u^2 + 4u + 1 has distinct roots)
    assert poly_squarefree_check(poly_parse("x^4 + y^4 + 4*x^2*y^2"), seed=1)
    assert classify(germ("x^4 + y^4 + 4*x^2*y^2")).stype == X9


@pytest.mark.slow
def test_degenerate_t236_is_not_t236():
    K = field_make([-2, 0, 0, 1], "b")  # b^3 = 2, a = -3b/2 gives 4a^3 + 27 = 0
    g = germ("x^3 + y^6 - 3/2*b*x^2*y^2", K)
    # the germ has a double component x = c*y^2, so the singularity is not isolated
    with pytest.raises(NonIsolated):
        classify(g)


def test_not_singular_and_not_on_curve():
    with pytest.raises(NotSingular):
        classify(germ("x + y^2"))
    with pytest.raises(NotOnCurve):
        classify(germ("1 + x^2"))
    f = poly_parse("x*y*z")
    with pytest.raises(NotOnCurve):
        analyze_point(f, parse_point("(1:1:1)", QQ))
    with pytest.raises(NotOnCurve):  # on the curve, but a smooth point
        analyze_point(f, parse_point("(1:1:0)", QQ))


def test_projective_points_of_corpus_curves(corpus_files):
    f = corpus_files["degree9_maximizing"].polynomial()
    K = f.field
    rec = analyze_point(f, parse_point("(1:0:i)", K))
    assert rec.stype == E7 and rec.mu == rec.tau == 7 and rec.lct == Fraction(5, 9)
    rec = analyze_point(f, parse_point("(1:1:1)", K))
    assert rec.stype == A(1)


def test_hesse_quadruple_point(corpus_reports):
    rep = corpus_reports["hesse"]
    quads = [s for s in rep.singularities if s.mult == 4]
    assert len(quads) == 9
    assert all(s.stype == X9 and s.mu == s.tau == 9 for s in quads)


def test_type_parse_roundtrip():
    for _, t, _ in NORMAL_FORMS:
        assert SingularityType.parse(str(t)) == t
    assert SingularityType.parse("T_2,3,6") == T236
    u = SingularityType.parse("Unclassified(multiplicity 5)")
    assert u.reason == "multiplicity 5" and not u.classified
    with pytest.raises(ValueError):
        SingularityType.parse("Q7")
    with pytest.raises(ValueError):
        D(3)


@settings(max_examples=25)
@given(st.integers(1, 6), st.integers(-5, 5), st.integers(-5, 5))
def test_mu_at_least_tau(k, b, c):
    g = germ(f"x^2 + y^{k + 1} + {b}*x*y^{k} + {c}*y^{k + 2}")
    try:
        mu, tau = local_milnor(g), local_tjurina(g)
    except (NonIsolated, NotSingular):
        return
    assert mu >= tau >= 1
