import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plane_curves.arrangements import (CmResult, LineArrangement, WeakCombinatorics,
                                       cm_check, cm_lhs, cm_rhs, intersection_lattice,
                                       naive_count_check, ordinary_type_map, parse_tuple,
                                       screen, tau_from_combinatorics)
from plane_curves.criteria import NotApplicable
from plane_curves.errors import InputError, MalformedTuple, ProportionalLines
from plane_curves.global_inv import total_tjurina
from plane_curves.local import analyze_point
from plane_curves.poly import Poly, poly_parse
from plane_curves.stypes import X9, A, D

ARRANGEMENTS = ["triangle", "hesse", "arrangement_a9_1", "arrangement_a13_2"]


def arrangement(*lines):
    return LineArrangement([poly_parse(s) for s in lines])


def test_lattice_examples(corpus_files):
    _, wc = intersection_lattice(arrangement("x", "y", "z"))
    assert wc.tk == {2: 3}
    _, wc = intersection_lattice(arrangement("x", "y", "z", "x + 2*y + 3*z"))
    assert wc.tk == {2: 6}
    hesse = corpus_files["hesse"]
    pts, wc = intersection_lattice(LineArrangement(hesse.lines))
    assert wc.tk == {2: 12, 4: 9}
    assert len(pts) == 21 and [k for _, k in pts][:9] == [4] * 9


def test_lattice_rejects_bad_input():
    with pytest.raises(ProportionalLines):
        arrangement("x", "2*x", "y")
    with pytest.raises(InputError):
        arrangement("x", "y^2")
    with pytest.raises(InputError):
        intersection_lattice(arrangement("x"))


def test_naive_count_examples():
    assert naive_count_check(WeakCombinatorics(12, {2: 12, 4: 9}))
    assert naive_count_check(WeakCombinatorics(21, {3: 28, 4: 21}))
    assert not naive_count_check(WeakCombinatorics(3, {2: 2}))


def test_cm_examples():
    for text in ("9 6 4 3", "13 12 4 9", "21 0 28 21"):
        assert cm_check(parse_tuple(text)) is CmResult.PASSES
    assert cm_lhs(parse_tuple("9 6 4 3")) == 23 == cm_rhs(9)
    assert cm_rhs(12) == 39
    assert cm_check(parse_tuple("12 12 0 9")) is CmResult.PASSES  # Hesse: 12 + 27 = 39
    assert cm_check(parse_tuple("9 36")) is CmResult.FAILS
    assert isinstance(cm_check(parse_tuple("6 0 0 0 0 1")), NotApplicable)
    assert isinstance(cm_check(parse_tuple("4 6")), NotApplicable)


def test_tau_from_combinatorics_examples():
    assert tau_from_combinatorics(parse_tuple("12 12 0 9")) == 93
    assert tau_from_combinatorics(parse_tuple("21 0 28 21")) == 301
    assert tau_from_combinatorics(parse_tuple("9 6 4 3")) == 49


def test_ordinary_type_map():
    assert ordinary_type_map(2) == A(1)
    assert ordinary_type_map(3) == D(4)
    assert ordinary_type_map(4) == X9
    assert not ordinary_type_map(5).classified
    with pytest.raises(ValueError):
        ordinary_type_map(1)


def test_parse_tuple_forms():
    assert parse_tuple("9; 6, 4, 3").as_tuple() == (9, 6, 4, 3)
    assert str(parse_tuple("12 12 0 9")) == "12 12 0 9"
    for bad in ("", "9", "9 a", "9 -1", "0 1"):
        with pytest.raises(MalformedTuple):
            parse_tuple(bad)


def test_screen_records():
    rec = screen(parse_tuple("21 0 28 21"))
    assert rec["candidate"] and rec["tau"] == 301 == rec["target_tau"]
    assert rec["target_exponents"] == [9, 11]
    rec = screen(parse_tuple("13 12 4 9"))
    assert rec["target_exponents"] == [5, 7] and rec["tau_matches_target"]
    assert not screen(parse_tuple("9 36"))["candidate"]


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_lattice_types_match_jet_classifier(corpus_files, name):
    cf = corpus_files[name]
    arr = LineArrangement(cf.lines)
    f = arr.polynomial()
    pts, _ = intersection_lattice(arr)
    for p, k in pts:
        rec = analyze_point(f, p)
        assert rec.stype == ordinary_type_map(k) and rec.mult == k


@pytest.mark.parametrize("name", ARRANGEMENTS)
def test_combinatorial_tau_matches_hilbert(corpus_reports, name):
    rep = corpus_reports[name]
    wc = WeakCombinatorics(rep.invariants.degree, {int(k): t for k, t in rep.lattice["tk"].items()})
    assert tau_from_combinatorics(wc) == rep.lattice["tau"] == rep.invariants.tau
    assert rep.lattice["jet_agrees"]


def test_free_arrangement_exponent_identity(corpus_reports):
    for name in ARRANGEMENTS:
        rep = corpus_reports[name]
        inv = rep.invariants
        if inv.free:
            d1, d2 = inv.exponents
            assert sum((int(k) - 1) * t for k, t in rep.lattice["tk"].items()) == d1 * d2 + d1 + d2


def test_triangle_tau_direct():
    arr = arrangement("x", "y", "z")
    assert total_tjurina(arr.polynomial()) == tau_from_combinatorics(intersection_lattice(arr)[1])


def _apply(line, M):
    x, y, z = (Poly.variable(line.field, line.vars, i) for i in range(3))
    images = [x * M[i][0] + y * M[i][1] + z * M[i][2] for i in range(3)]
    return line.substitute(images)


@settings(max_examples=10)
@given(st.integers(0, 2 ** 32), st.sampled_from(ARRANGEMENTS))
def test_lattice_invariant_under_projective_change(seed, name):
    from plane_curves.cli import corpus_dir
    from plane_curves.curvefile import load_curve

    cf = next(load_curve(p) for p in corpus_dir().glob("*.curve") if load_curve(p).name == name)
    rng = random.Random(seed)
    while True:
        M = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
               - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
               + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
        if det:
            break
    before = intersection_lattice(LineArrangement(cf.lines))[1]
    after = intersection_lattice(LineArrangement([_apply(l, M) for l in cf.lines]))[1]
    assert before == after


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)),
                min_size=2, max_size=9, unique=True))
def test_naive_count_holds_for_any_realized_arrangement(coeffs):
    lines = [poly_parse(f"{a}*x + {b}*y + {c}*z") for a, b, c in coeffs if (a, b, c) != (0, 0, 0)]
    try:
        arr = LineArrangement(lines)
    except (ProportionalLines, InputError):
        return
    if len(arr) < 2:
        return
    assert naive_count_check(intersection_lattice(arr)[1])
