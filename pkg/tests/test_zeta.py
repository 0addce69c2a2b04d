from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import EDGE, PATH3, PATH4, star
from f1z.classes import ZERO, ClassPolynomial, L, gm_class, projective_class, tree_class
from f1z.errors import PreconditionError
from f1z.graph import LooseGraph
from f1z.zeta import (
    ZetaDescriptor,
    arithmetic_zeta,
    class_from_zeta,
    f1_zeta,
    render_arithmetic,
    render_f1,
    render_product,
    tree_zeta,
)


def test_f1_zeta_examples():
    assert f1_zeta(L + 1).factors == ((0, -1), (1, -1))
    assert f1_zeta(L**2 + 2).factors == ((0, -2), (2, -1))
    assert f1_zeta(gm_class()).factors == ((0, 1), (1, -1))


def test_tree_zeta_examples():
    assert tree_zeta(PATH4).factors == ((0, -3), (1, 1), (2, -2))
    assert tree_zeta(EDGE).factors == ((0, -1), (1, -1))
    assert tree_zeta(star(3)).factors == ((0, -3), (3, -1))
    assert tree_zeta(LooseGraph.build("a")).factors == ((0, -1),)


@pytest.mark.parametrize(
    "p, text",
    [
        (L + 1, "1/(t(t-1))"),
        (L**2 + 2, "1/(t^2 (t-2))"),
        (gm_class(), "t/(t-1)"),
        (2 * L**2 - L + 3, "(t-1)/(t^3 (t-2)^2)"),
        (projective_class(2), "1/(t(t-1)(t-2))"),
        (ZERO, "1"),
    ],
)
def test_render_f1(p, text):
    assert render_f1(f1_zeta(p)) == text


def test_render_latex():
    assert render_f1(f1_zeta(L + 1), latex=True) == "\\frac{1}{t(t-1)}"


def test_render_product():
    assert render_product(f1_zeta(L + 1)) == "(t - 0)^(-1) (t - 1)^(-1)"


def test_arithmetic_zeta():
    assert render_arithmetic(arithmetic_zeta(projective_class(2))) == "ζ(s)ζ(s-1)ζ(s-2)"
    assert render_arithmetic(arithmetic_zeta(gm_class())) == "ζ(s-1)/ζ(s)"
    assert render_arithmetic(arithmetic_zeta(ZERO)) == "1"


def test_descriptor_validation():
    with pytest.raises(PreconditionError):
        ZetaDescriptor(((1, 1), (0, 1)))
    with pytest.raises(PreconditionError):
        ZetaDescriptor(((0, 0),))
    with pytest.raises(PreconditionError):
        ZetaDescriptor(((-1, 2),))


polys = st.dictionaries(st.integers(0, 6), st.integers(-9, 9), max_size=5).map(ClassPolynomial)


@given(polys, polys)
def test_zeta_is_multiplicative_in_classes(a, b):
    za, zb, zab = (dict(f1_zeta(x).factors) for x in (a, b, a + b))
    keys = set(za) | set(zb)
    assert {k: za.get(k, 0) + zb.get(k, 0) for k in keys if za.get(k, 0) + zb.get(k, 0)} == zab


@given(polys)
def test_round_trip(p):
    assert class_from_zeta(f1_zeta(p)) == p
    assert class_from_zeta(arithmetic_zeta(p)) == p
    assert f1_zeta(p).to_json() == {"factors": [list(f) for f in f1_zeta(p).factors]}


@pytest.mark.parametrize("t", [EDGE, PATH3, PATH4, star(3)])
def test_tree_closed_form_agrees(t):
    assert tree_zeta(t) == f1_zeta(tree_class(t))
