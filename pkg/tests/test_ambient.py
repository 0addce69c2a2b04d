from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CYCLE4, EDGE, FREE_EDGE, K3, K4, PATH3, PATH4, complete_graph
from f1z.ambient import (
    ProjPoint,
    build_ambient,
    count_in_subspace,
    count_points,
    iter_points,
    local_intersection_nonempty,
    member,
    model_components,
    projective_size,
)
from f1z.errors import BudgetExceeded, PreconditionError
from f1z.graph import degree, resolve_edge
from test_graph import loose_graphs


def test_coordinates_and_supports():
    m = build_ambient(PATH3)
    assert m.coords == ("a", "b", "c")
    assert m.support["b"] == frozenset("abc")
    assert build_ambient(resolve_edge(K3, ("a", "c"))).n == 5
    free = build_ambient(FREE_EDGE)
    assert free.n == 2 and free.vertices == []


def test_proj_point_normalization():
    p = ProjPoint(5, (0, 3, 1))
    assert p.coordinates == (0, 1, 2)
    with pytest.raises(PreconditionError):
        ProjPoint(3, (0, 0))


def test_member_predicate():
    m = build_ambient(PATH3)
    assert not member(m, ProjPoint(2, (1, 0, 1)))
    assert sum(member(m, p) for p in iter_points(2, 3)) == 6
    k4 = build_ambient(K4)
    assert all(member(k4, p) for p in iter_points(3, 4))
    f = build_ambient(FREE_EDGE)
    assert all(member(f, ProjPoint(5, (1, x))) for x in range(1, 5))
    assert not member(f, ProjPoint(5, (1, 0)))
    assert not member(f, ProjPoint(5, (0, 1)))


@pytest.mark.parametrize(
    "g, q, expected",
    [
        (PATH3, 2, 6),
        (PATH3, 3, 11),
        (PATH3, 5, 27),
        (K3, 2, 7),
        (K3, 3, 13),
        (K3, 5, 31),
        (PATH4, 2, 9),
        (FREE_EDGE, 2, 1),
        (FREE_EDGE, 5, 4),
    ],
)
def test_counts(g, q, expected):
    m = build_ambient(g)
    assert count_points(m, q) == expected
    assert count_points(m, q, method="strata") == expected


def test_count_in_subspace():
    m = build_ambient(K3)
    assert count_in_subspace(m, m.coords, 2) == count_points(m, 2)
    assert count_in_subspace(m, (), 2) == 0
    assert count_in_subspace(m, ("a", "b"), 2) == 3


def test_budget_and_prime_checks():
    m = build_ambient(complete_graph(8))
    with pytest.raises(BudgetExceeded):
        count_points(m, 5, budget=1000)
    assert count_points(m, 5, budget=1000, method="auto") == projective_size(8, 5)
    with pytest.raises(PreconditionError):
        count_points(m, 4)


def test_local_intersections():
    m = build_ambient(PATH3)
    assert local_intersection_nonempty(m, "a", "b", 2)
    assert not local_intersection_nonempty(m, "a", "c", 2)
    k4 = build_ambient(K4)
    assert all(local_intersection_nonempty(k4, u, v, 2) for u in "abcd" for v in "abcd" if u < v)


def test_model_components():
    assert model_components(build_ambient(CYCLE4), 2) == 1
    assert model_components(build_ambient(resolve_edge(EDGE, ("a", "b"))), 2) == 2


@settings(max_examples=40, deadline=None)
@given(loose_graphs(max_vertices=5), st.sampled_from([2, 3]))
def test_strata_matches_enumeration(g, q):
    m = build_ambient(g)
    if projective_size(m.n, q) > 50_000:
        return
    assert count_points(m, q, method="strata") == count_points(m, q, method="enumerate")


@given(loose_graphs(max_vertices=5))
def test_support_sizes(g):
    m = build_ambient(g)
    assert m.n == len(g.vertices) + len(g.half_edges) + 2 * len(g.free_edges)
    assert all(len(m.support[v]) == degree(g, v) + 1 for v in g.vertices)
