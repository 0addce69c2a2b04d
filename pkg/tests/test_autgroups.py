from __future__ import annotations

import itertools

import pytest

from conftest import EDGE, FREE_EDGE, K3, PATH3, PATH4, star
from f1z import autgroups as A
from f1z.ambient import build_ambient, member_points
from f1z.autgroups.projective import (
    apply,
    mat_mul,
    normalize_matrix,
    permutation_matrix,
    pgl_order,
    stabilizer_elements,
)
from f1z.autgroups.trees import adjacency, canonical_code, inner_tree
from f1z.errors import BudgetExceeded, PreconditionError
from f1z.graph import LooseGraph

SPIDER = LooseGraph.build(
    ["w", "a1", "a2", "b1", "b2", "c1", "c2"],
    [("w", "a1"), ("a1", "a2"), ("w", "b1"), ("b1", "b2"), ("w", "c1"), ("c1", "c2")],
)


def test_pgl_orders():
    assert pgl_order(2, 2) == 6
    assert pgl_order(3, 2) == 168
    assert pgl_order(2, 5) == 120


def test_inner_trees():
    assert inner_tree(PATH4).full_edges == (("b", "c"),)
    assert inner_tree(star(3)).vertices == ("w",)
    spider = inner_tree(SPIDER)
    assert set(spider.vertices) == {"w", "a1", "b1", "c1"}
    assert len(spider.full_edges) == 3


def test_tree_aut_orders():
    assert A.tree_aut_order(adjacency(EDGE)) == 2
    assert A.tree_aut_order(adjacency(PATH3)) == 2
    assert A.tree_aut_order(adjacency(star(3))) == 6
    assert A.tree_aut_order(SPIDER) == 6


def test_tree_generators_are_automorphisms():
    adj = adjacency(SPIDER)
    order, gens = A.tree_automorphisms(adj)
    assert order == 6 and gens
    edges = {frozenset((u, v)) for u in adj for v in adj[u]}
    for g in gens:
        assert {frozenset(g.get(x, x) for x in e) for e in edges} == edges


def test_canonical_code_is_label_free():
    relabelled = LooseGraph.build("xyzu", [("u", "z"), ("z", "y"), ("y", "x")])
    assert canonical_code(relabelled) == canonical_code(PATH4)
    assert canonical_code(star(3)) != canonical_code(PATH4)


def test_sw_params():
    p = A.sw_params(star(3), "w")
    assert (p.symbol, p.e, p.l, p.i) == ("†", 3, 0, 0)
    p = A.sw_params(PATH4, "b")
    assert (p.symbol, p.e, p.l, p.i) == ("‡", 1, 0, 1)
    g = LooseGraph.build("wab", [("w", "a"), ("w", "b")], half=["w"])
    p = A.sw_params(g, "w")
    assert (p.symbol, p.e, p.l, p.i) == ("†", 2, 1, 0)
    with pytest.raises(PreconditionError):
        A.sw_params(PATH4, "a")


@pytest.mark.parametrize("g, q, order", [(EDGE, 2, 6), (K3, 2, 168), (EDGE, 3, 24)])
def test_projective_stabilizer(g, q, order):
    rep = A.brute_force_proj_aut(build_ambient(g), q)
    assert rep.order == order
    assert rep.verify_closure()


def test_stabilizer_matches_exhaustive_search():
    m = build_ambient(PATH3)
    rep = A.brute_force_proj_aut(m, 2)
    pts = {p.coordinates for p in member_points(m, 2)}
    for a in rep.elements:
        assert {apply(a, p, 2) for p in pts} == pts
    count = set()
    for rows in itertools.product(itertools.product(range(2), repeat=3), repeat=3):
        if not any(map(any, rows)):
            continue
        a = normalize_matrix(rows, 2)
        try:
            imgs = [apply(a, p, 2) for p in pts]
        except ValueError:  # singular: some member point is killed
            continue
        if set(imgs) == pts:
            count.add(a)
    assert len(count) == rep.order


def test_group_budget():
    with pytest.raises(BudgetExceeded):
        A.brute_force_proj_aut(build_ambient(PATH4), 3, budget=100)


def test_star_sw_orders():
    m = build_ambient(star(3))
    assert A.s_w_bruteforce(m, "w", 3).order == 8
    assert A.s_w_bruteforce(m, "w", 2).order == 1


def test_sw_fixes_local_spaces():
    m = build_ambient(PATH4)
    rep = A.s_w_bruteforce(m, "b", 3)
    w_point = (0, 1, 0, 0)
    far = [p.coordinates for p in member_points(m, 3) if p.coordinates[0] == 0 and p.coordinates[1] == 0]
    for a in rep.elements:
        assert apply(a, w_point, 3) == w_point
        assert all(apply(a, p, 3) == p for p in far)


def test_sw_generators_commute():
    m = build_ambient(PATH4)
    gb = A.s_w_bruteforce(m, "b", 3).generators
    gc = A.s_w_bruteforce(m, "c", 3).generators
    for x in gb:
        for y in gc:
            assert mat_mul(x, y, 3) == mat_mul(y, x, 3)


def test_lifted_inner_automorphisms():
    lifted, dropped = A.lifted_inner_automorphisms(PATH4)
    assert lifted == [[3, 2, 1, 0]] and dropped == []
    decorated = LooseGraph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d")], half=["b"])
    lifted, dropped = A.lifted_inner_automorphisms(decorated)
    assert lifted == [] and len(dropped) == 1


def test_structural_checks_q3():
    assert A.decomposition_check(PATH4, 3)
    assert A.inner_tree_stability_check(PATH4, 3)


def test_inner_tree_stability_q2():
    assert A.inner_tree_stability_check(PATH4, 2)


def test_structural_preconditions():
    with pytest.raises(PreconditionError):
        A.decomposition_check(star(3), 2)
    with pytest.raises(PreconditionError):
        A.inner_tree_stability_check(EDGE, 2)
    with pytest.raises(PreconditionError):
        A.decomposition_check(K3, 2)


def test_incidence_geometries():
    g = A.incidence_geometry(build_ambient(EDGE), 2)
    assert len(g.points) == 3 and [t for _, t in g.lines] == [A.PROJECTIVE]
    g = A.incidence_geometry(build_ambient(PATH3), 2)
    assert len(g.points) == 6
    index = {p: i for i, p in enumerate(g.points)}
    ab = frozenset(index[p] for p in [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    bc = frozenset(index[p] for p in [(0, 1, 0), (0, 0, 1), (0, 1, 1)])
    proj = {pts for pts, t in g.lines if t == A.PROJECTIVE}
    assert {ab, bc} <= proj
    b = index[(0, 1, 0)]
    assert any(t == A.AFFINE and b in pts for pts, t in g.lines)
    g = A.incidence_geometry(build_ambient(FREE_EDGE), 3)
    assert len(g.points) == 2 and g.lines == ()


@pytest.mark.parametrize("q, order", [(2, 6), (5, 720)])
def test_comb_single_edge(q, order):
    assert A.comb_aut_order(A.incidence_geometry(build_ambient(EDGE), q)) == order


@pytest.mark.parametrize("g, q", [(PATH3, 2), (PATH4, 2), (star(3), 2), (EDGE, 3)])
def test_projective_group_embeds_in_combinatorial(g, q):
    m = build_ambient(g)
    geom = A.incidence_geometry(m, q)
    proj = A.brute_force_proj_aut(m, q)
    perms = {tuple(A.induced_point_permutation(geom, a)) for a in proj.elements}
    assert len(perms) == proj.order
    assert all(A.preserves_lines(geom, p) for p in perms)
    assert A.comb_aut_order(geom) % proj.order == 0


def test_report_json():
    rep = A.brute_force_proj_aut(build_ambient(EDGE), 2)
    data = rep.to_json()
    assert data["order"] == 6
    assert data["dimension"] == 2
    assert all(len(g) == 2 and all(len(r) == 2 for r in g) for g in data["generators"])


def test_permutation_matrix_action():
    a = permutation_matrix([1, 2, 0])
    assert apply(a, (1, 0, 0), 2) == (0, 1, 0)


def test_stabilizer_with_fixed_points():
    m = build_ambient(EDGE)
    pts = {p.coordinates for p in member_points(m, 3)}
    elems = stabilizer_elements(2, 3, pts, fixed={(1, 0), (0, 1)})
    assert len(elems) == 2
