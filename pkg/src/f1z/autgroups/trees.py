"""Automorphisms of (loose) trees via canonical rooted encodings at the centre."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from ..errors import PreconditionError
from ..graph import LooseGraph, boundary_and_inner, degree, half_phantom, is_loose_tree

Adjacency = Mapping[str, list[str]]


def completion_adjacency(t: LooseGraph) -> tuple[dict[str, list[str]], dict[str, str]]:
    """Adjacency of the completion of a loose tree and a colour per node ("v" real, "p" phantom)."""
    adj: dict[str, list[str]] = {v: [] for v in t.vertices}
    colour = {v: "v" for v in t.vertices}
    for u, v in t.full_edges:
        adj[u].append(v)
        adj[v].append(u)
    for v, tag in t.half_edges:
        p = half_phantom(tag)
        adj[v].append(p)
        adj[p] = [v]
        colour[p] = "p"
    return adj, colour


def inner_tree(t: LooseGraph) -> LooseGraph:
    """The ordinary tree induced on the inner vertices (degree >= 2)."""
    _, inner = boundary_and_inner(t)
    if not inner:
        raise PreconditionError("loose tree has no inner vertices")
    return LooseGraph(
        vertices=tuple(sorted(inner)),
        full_edges=tuple(e for e in t.full_edges if e[0] in inner and e[1] in inner),
    )


def _centers(adj: Adjacency) -> list[str]:
    deg = {v: len(n) for v, n in adj.items()}
    layer = sorted(v for v, d in deg.items() if d <= 1)
    remaining = len(adj)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = sorted(nxt)
    return layer


@dataclass
class _Rooted:
    adj: Adjacency
    colour: Mapping[str, str]

    def code(self, v: str, parent: str | None) -> str:
        kids = sorted(self.code(c, v) for c in self.adj[v] if c != parent)
        return self.colour.get(v, "") + "(" + "".join(kids) + ")"

    def children(self, v: str, parent: str | None) -> list[tuple[str, str]]:
        """``(code, child)`` sorted by code then id."""
        return sorted((self.code(c, v), c) for c in self.adj[v] if c != parent)

    def aut_order(self, v: str, parent: str | None) -> int:
        kids = self.children(v, parent)
        order = 1
        for _, c in kids:
            order *= self.aut_order(c, v)
        codes = [k for k, _ in kids]
        for k in set(codes):
            order *= math.factorial(codes.count(k))
        return order

    def iso(self, a: str, pa: str | None, b: str, pb: str | None, out: dict[str, str]) -> None:
        """Extend ``out`` with an isomorphism of the rooted subtree at ``a`` onto the one at ``b``."""
        out[a] = b
        for (_, ca), (_, cb) in zip(self.children(a, pa), self.children(b, pb)):
            self.iso(ca, a, cb, b, out)

    def generators(self, v: str, parent: str | None, out: list[dict[str, str]]) -> None:
        kids = self.children(v, parent)
        for (k1, c1), (k2, c2) in zip(kids, kids[1:]):
            if k1 == k2:
                swap: dict[str, str] = {}
                self.iso(c1, v, c2, v, swap)
                self.iso(c2, v, c1, v, swap)
                out.append(swap)
        for _, c in kids:
            self.generators(c, v, out)


def _tree_input(t) -> tuple[dict[str, list[str]], dict[str, str]]:
    if isinstance(t, LooseGraph):
        if not is_loose_tree(t):
            raise PreconditionError("input is not a connected tree")
        return completion_adjacency(t)
    adj = {v: list(n) for v, n in t.items()}
    return adj, {}


def tree_automorphisms(t) -> tuple[int, list[dict[str, str]]]:
    """Order and generators (as vertex maps, identity entries omitted) of a tree's automorphism group.

    ``t`` is a loose tree (its completion is used; phantom leaves are only
    exchanged with phantom leaves) or a plain adjacency mapping.
    """
    adj, colour = _tree_input(t)
    if not adj:
        raise PreconditionError("empty tree")
    if _components(adj) != 1:
        raise PreconditionError("tree is disconnected")
    r = _Rooted(adj, colour)
    centers = _centers(adj)
    gens: list[dict[str, str]] = []
    if len(centers) == 1:
        c = centers[0]
        order = r.aut_order(c, None)
        r.generators(c, None, gens)
    else:
        a, b = centers
        order = r.aut_order(a, b) * r.aut_order(b, a)
        r.generators(a, b, gens)
        r.generators(b, a, gens)
        if r.code(a, b) == r.code(b, a):
            order *= 2
            swap: dict[str, str] = {}
            r.iso(a, b, b, a, swap)
            r.iso(b, a, a, b, swap)
            gens.append(swap)
    gens = [{k: v for k, v in g.items() if k != v} for g in gens]
    return order, [g for g in gens if g]


def tree_aut_order(t) -> int:
    return tree_automorphisms(t)[0]


def _components(adj: Adjacency) -> int:
    seen: set[str] = set()
    count = 0
    for s in adj:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def adjacency(g: LooseGraph) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v in g.full_edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


@dataclass(frozen=True)
class SwParams:
    case: str  # "dagger" (w the only inner vertex) or "double-dagger"
    e: int  # edges at w ending in a real boundary vertex
    l: int  # loose (half-)edges at w
    i: int  # edges from w to another inner vertex

    @property
    def symbol(self) -> str:
        return "†" if self.case == "dagger" else "‡"


def sw_params(t: LooseGraph, w: str) -> SwParams:
    boundary, inner = boundary_and_inner(t)
    if w not in inner:
        raise PreconditionError(f"{w!r} is not an inner vertex")
    nbrs = t.neighbors(w)
    i = sum(1 for v in nbrs if v in inner)
    e = len(nbrs) - i
    l = len(t.half_tags(w))
    assert e + l + i == degree(t, w)
    return SwParams("dagger" if len(inner) == 1 else "double-dagger", e, l, i)


def canonical_code(t: LooseGraph) -> str:
    """Isomorphism-invariant string for a loose tree (half-edges included)."""
    adj, colour = _tree_input(t)
    r = _Rooted(adj, colour)
    centers = _centers(adj)
    if len(centers) == 1:
        return r.code(centers[0], None)
    a, b = centers
    return "|".join(sorted([r.code(a, b), r.code(b, a)]))
