"""Automorphism groups of lifted loose-graph schemes over small prime fields.

Everything here is brute force at desk scale: projective stabilizers come
from an exhaustive (pruned) search of PGL(n, q), and the structural statements
for loose trees are checked by comparing generated subgroups element by
element.
"""

from __future__ import annotations

from ..ambient import DEFAULT_BUDGET, AmbientModel, build_ambient, iter_points, member_points
from ..errors import PreconditionError
from ..graph import LooseGraph, boundary_and_inner, is_loose_tree
from .incidence import (
    AFFINE,
    PROJECTIVE,
    ColoredGraph,
    IncidenceGeometry,
    comb_aut_order,
    geometry_graph,
    incidence_geometry,
    preserves_lines,
)
from .projective import (
    DEFAULT_GROUP_BUDGET,
    GroupReport,
    Matrix,
    apply,
    closure,
    permutation_matrix,
    pgl_order,
    report_from_elements,
    stabilizer_elements,
    torus_generators,
)
from .trees import SwParams, inner_tree, sw_params, tree_aut_order, tree_automorphisms

__all__ = [
    "AFFINE",
    "PROJECTIVE",
    "ColoredGraph",
    "GroupReport",
    "IncidenceGeometry",
    "SwParams",
    "brute_force_proj_aut",
    "comb_aut_order",
    "decomposition_check",
    "geometry_graph",
    "incidence_geometry",
    "induced_point_permutation",
    "inner_tree",
    "inner_tree_stability_check",
    "lifted_inner_automorphisms",
    "pgl_order",
    "preserves_lines",
    "s_w_bruteforce",
    "s_w_fixed_points",
    "sw_params",
    "tree_aut_order",
    "tree_automorphisms",
]


def _member_set(m: AmbientModel, q: int) -> set[tuple[int, ...]]:
    return {p.coordinates for p in member_points(m, q, DEFAULT_BUDGET)}


def brute_force_proj_aut(
    m: AmbientModel, q: int, budget: int = DEFAULT_GROUP_BUDGET
) -> GroupReport:
    """Setwise stabilizer of the member points inside PGL(n, q) (= PGammaL for prime q)."""
    elems = stabilizer_elements(m.n, q, _member_set(m, q), budget=budget)
    return report_from_elements(elems, q, m.n, group="setwise stabilizer")


def s_w_fixed_points(m: AmbientModel, w: str, q: int, inner=()) -> set[tuple[int, ...]]:
    """Points S(w) must fix.

    For each real vertex v != w: the member points supported on ``v`` and its
    completion neighbours other than ``w``, with ``p_v != 0``.  Also the points
    of the inner vertices within distance 1 of ``w`` (``w`` included).
    """
    if w not in m.support:
        raise PreconditionError(f"unknown vertex {w!r}")
    fixed = set()
    for v, supp in m.support.items():
        if v == w:
            continue
        positions = [m.index[c] for c in supp if c != w]
        anchor = m.index[v]
        for p in iter_points(q, m.n, sorted(positions)):
            if p.coordinates[anchor] and m.is_member_support(p.support_mask):
                fixed.add(p.coordinates)
    for u in inner:
        if u == w or w in m.support[u]:
            fixed.add(tuple(int(i == m.index[u]) for i in range(m.n)))
    return fixed


def s_w_bruteforce(
    m: AmbientModel, w: str, q: int, inner=None, budget: int = DEFAULT_GROUP_BUDGET
) -> GroupReport:
    """The subgroup S(w) of the projective stabilizer.

    ``inner`` defaults to every real vertex of degree >= 2 in the model.
    """
    if inner is None:
        inner = [v for v, s in m.support.items() if len(s) >= 3]
    fixed = s_w_fixed_points(m, w, q, inner)
    elems = stabilizer_elements(m.n, q, _member_set(m, q), fixed=fixed, budget=budget)
    return report_from_elements(elems, q, m.n, group=f"S({w})", fixed_points=len(fixed))


def lifted_inner_automorphisms(t: LooseGraph) -> tuple[list[list[int]], list[dict[str, str]]]:
    """Generators of Aut(T(I)) lifted to permutations of ambient coordinates.

    Each inner-tree generator is extended by sending the real leaves and the
    half-edge phantoms at ``w`` to those at its image, in coordinate order.
    Generators whose decorations do not match cannot be lifted and are
    returned separately.
    """
    m = build_ambient(t)
    _, inner = boundary_and_inner(t)
    _, gens = tree_automorphisms(inner_tree(t))
    lifted, dropped = [], []
    for g in gens:
        full = {v: g.get(v, v) for v in inner}
        ok = True
        for w in inner:
            for kind in ("leaf", "phantom"):
                src, dst = _decor(t, m, w, kind), _decor(t, m, full[w], kind)
                if len(src) != len(dst):
                    ok = False
                full.update(zip(src, dst))
        if not ok:
            dropped.append(g)
            continue
        perm = [m.index[full.get(c, c)] for c in m.coords]
        lifted.append(perm)
    return lifted, dropped


def _decor(t: LooseGraph, m: AmbientModel, w: str, kind: str) -> list[str]:
    if kind == "leaf":
        return sorted(v for v in t.neighbors(w) if len(m.support[v]) == 2)
    return [c for c in m.coords if c in m.support[w] and c not in m.support]


def _structural_setup(t: LooseGraph, q: int, budget: int):
    if not is_loose_tree(t):
        raise PreconditionError("input is not a loose tree")
    _, inner = boundary_and_inner(t)
    if len(inner) < 2:
        raise PreconditionError("needs at least two inner vertices")
    m = build_ambient(t)
    return m, sorted(inner), brute_force_proj_aut(m, q, budget)


def decomposition_check(t: LooseGraph, q: int, budget: int = DEFAULT_GROUP_BUDGET) -> bool:
    """Whether the S(w), the lifted inner-tree automorphisms and the torus generate the full stabilizer."""
    m, inner, full = _structural_setup(t, q, budget)
    gens: list[Matrix] = []
    for w in inner:
        gens += s_w_bruteforce(m, w, q, inner, budget).generators
    gens += [permutation_matrix(p) for p in lifted_inner_automorphisms(t)[0]]
    gens += torus_generators(m.n, q)
    if any(g not in full.elements for g in gens):
        return False
    return closure(gens, q, m.n, limit=full.order) == full.elements


def inner_tree_points(m: AmbientModel, inner, q: int) -> set[tuple[int, ...]]:
    """Points of the inner vertices and of the projective lines on inner edges."""
    inner = set(inner)
    pts = set()
    for u in inner:
        for v in inner:
            if u <= v and (u == v or v in m.support[u]):
                positions = sorted({m.index[u], m.index[v]})
                pts |= {p.coordinates for p in iter_points(q, m.n, positions)}
    return pts


def inner_tree_stability_check(t: LooseGraph, q: int, budget: int = DEFAULT_GROUP_BUDGET) -> bool:
    m, inner, full = _structural_setup(t, q, budget)
    target = inner_tree_points(m, inner, q)
    return all({apply(g, p, q) for p in target} == target for g in full.elements)


def induced_point_permutation(geom: IncidenceGeometry, a: Matrix) -> list[int]:
    index = {p: i for i, p in enumerate(geom.points)}
    return [index[apply(a, p, geom.q)] for p in geom.points]
