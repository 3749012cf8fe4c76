import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rothe_tableaux.errors import ContextMismatch, EmptySequence, NonExactDivision, ZeroPolynomial
from rothe_tableaux.poly import (
    Polynomial,
    Ring,
    _divide,
    divided_difference,
    isobaric,
    lemma41_rhs,
    lowest_degree_component,
    negate_y,
    oplus,
    product,
    set_y_zero,
    substitute,
    swap_x,
)

R = Ring(4, 3)
XS = sympy.symbols("x1:5")
YS = sympy.symbols("y1:4")


def to_sympy(f: Polynomial):
    out = 0
    for c, xe, ye in f.sorted_terms():
        term = sympy.Integer(c)
        for v, a in zip(XS, xe):
            term *= v**a
        for v, a in zip(YS, ye):
            term *= v**a
        out += term
    return sympy.expand(out)


terms = st.lists(
    st.tuples(
        st.integers(-5, 5),
        st.lists(st.integers(0, 3), min_size=4, max_size=4),
        st.lists(st.integers(0, 2), min_size=3, max_size=3),
    ),
    max_size=6,
)
polys = terms.map(R.from_terms)
index = st.integers(1, 3)


def test_construction_and_printing():
    f = oplus(R.x(1), R.y(1))
    assert str(f) == "x1 + y1 - x1*y1"
    assert str(R.zero()) == "0"
    assert R.one() == 1
    assert len(f) == 3
    assert f.degree() == 2 and f.min_degree() == 1
    with pytest.raises(ZeroPolynomial):
        R.zero().min_degree()


def test_ring_mismatch():
    with pytest.raises(ContextMismatch):
        R.x(1) + Ring(2, 2).x(1)


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f - f == 0


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_product_matches_sympy(f, g):
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))


@given(polys, index)
@settings(max_examples=60, deadline=None)
def test_divided_difference_matches_sympy(f, i):
    xi, xj = XS[i - 1], XS[i]
    expr = to_sympy(f)
    expected = sympy.cancel((expr - expr.subs({xi: xj, xj: xi}, simultaneous=True)) / (xi - xj))
    assert to_sympy(divided_difference(f, i)) == sympy.expand(expected)


@given(polys, index)
@settings(max_examples=60, deadline=None)
def test_isobaric_matches_definition(f, i):
    assert isobaric(f, i) == divided_difference((1 - R.x(i + 1)) * f, i)


def test_small_values():
    assert divided_difference(R.x(1) ** 2, 1) == R.x(1) + R.x(2)
    assert isobaric(R.x(1), 1) == 1
    assert isobaric(R.x(1) ** 2, 1) == oplus(R.x(1), R.x(2))
    assert divided_difference(R.x(1) * R.x(2), 1) == 0


def test_monomial_closed_form():
    # d_1(x1^a x2^b) for a > b is sum_{k} x1^(a-1-k) x2^(b+k), k = 0..a-b-1
    for a in range(6):
        for b in range(6):
            f = R.monomial([a, b])
            if a > b:
                want = sum((R.monomial([a - 1 - k, b + k]) for k in range(a - b)), R.zero())
            elif a < b:
                want = -sum((R.monomial([b - 1 - k, a + k]) for k in range(b - a)), R.zero())
            else:
                want = R.zero()
            assert divided_difference(f, 1) == want


def test_remainder_is_detected():
    # x1 alone is not a multiple of x1 - x2
    with pytest.raises(NonExactDivision):
        _divide(dict(R.x(1).terms), R, 1)


@given(polys, index)
@settings(max_examples=60, deadline=None)
def test_operator_squares(f, i):
    assert divided_difference(divided_difference(f, i), i) == 0
    p = isobaric(f, i)
    assert isobaric(p, i) == p


@given(polys)
@settings(max_examples=40, deadline=None)
def test_braid_relations(f):
    for i in (1, 2):
        left = isobaric(isobaric(isobaric(f, i), i + 1), i)
        right = isobaric(isobaric(isobaric(f, i + 1), i), i + 1)
        assert left == right
    assert isobaric(isobaric(f, 1), 3) == isobaric(isobaric(f, 3), 1)


@given(polys, index)
@settings(max_examples=40, deadline=None)
def test_images_are_symmetric(f, i):
    assert swap_x(isobaric(f, i), i) == isobaric(f, i)
    assert swap_x(divided_difference(f, i), i) == divided_difference(f, i)


def test_y_helpers():
    f = R.x(1) * R.y(2) - R.y(1) ** 2 + R.x(3)
    assert negate_y(f) == -R.x(1) * R.y(2) - R.y(1) ** 2 + R.x(3)
    assert set_y_zero(f) == R.x(3)
    assert lowest_degree_component(f + 5) == 5
    assert lowest_degree_component(f) == R.x(3)


def test_substitute():
    S = Ring(2, 0, xname="t")
    f = S.x(1) * S.x(2) + 3
    g = substitute(f, [R.x(1) + 1, R.y(2)], R)
    assert g == (R.x(1) + 1) * R.y(2) + 3


def test_closed_form_product_identity():
    for r in (1, 2):
        for length in range(1, 4):
            rng = random.Random(length * 10 + r)
            for _ in range(5):
                a = [rng.randint(1, 3) for _ in range(length)]
                lhs = isobaric(product((oplus(R.x(r), R.y(aj)) for aj in a), R), r)
                rhs = lemma41_rhs(R, r, a)
                assert lhs == rhs
                assert swap_x(rhs, r) == rhs
    with pytest.raises(EmptySequence):
        lemma41_rhs(R, 1, [])


def test_degree_overflow():
    small = Ring(1, 0, width=2)
    with pytest.raises(OverflowError):
        small.x(1) ** 4
