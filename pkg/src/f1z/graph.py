"""Loose graphs: data model, `.lg` parsing, connectivity, spanning trees, resolution.

A loose graph has real vertices and three kinds of edges: full edges (two
distinct endpoints), half-edges (one endpoint) and free edges (none). Every
half- or free edge carries a tag so that two loose edges on the same vertex
stay distinguishable; the completion gives each loose edge its missing
endpoints ("phantoms"), labelled from those tags.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import LooseGraphError, PreconditionError

ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


def half_phantom(tag: str) -> str:
    return f"~{tag}"


def free_phantoms(tag: str) -> tuple[str, str]:
    return (f"~{tag}.0", f"~{tag}.1")


@dataclass(frozen=True)
class LooseGraph:
    """Immutable loose graph.

    ``full_edges`` are stored as sorted pairs in sorted order; ``half_edges``
    is a tuple of ``(vertex, tag)`` in declaration order and ``free_edges`` a
    tuple of tags.  Use :meth:`build` to get tags assigned automatically.
    """

    vertices: tuple[str, ...] = ()
    full_edges: tuple[Edge, ...] = ()
    half_edges: tuple[tuple[str, str], ...] = ()
    free_edges: tuple[str, ...] = ()

    def __post_init__(self):
        verts = tuple(sorted(self.vertices))
        if len(set(verts)) != len(verts):
            raise LooseGraphError("duplicate vertex")
        for v in verts:
            if not ID_RE.match(v):
                raise LooseGraphError(f"invalid vertex id {v!r}")
        vset = set(verts)
        edges = []
        for u, v in self.full_edges:
            if u == v:
                raise LooseGraphError(f"loop at {u!r}")
            for x in (u, v):
                if x not in vset:
                    raise LooseGraphError(f"undeclared endpoint {x!r}")
            edges.append(edge_key(u, v))
        if len(set(edges)) != len(edges):
            dup = next(e for e in edges if edges.count(e) > 1)
            raise LooseGraphError(f"duplicate full edge {dup[0]} {dup[1]}")
        tags = [t for _, t in self.half_edges] + list(self.free_edges)
        if len(set(tags)) != len(tags):
            raise LooseGraphError("duplicate loose-edge tag")
        for v, _ in self.half_edges:
            if v not in vset:
                raise LooseGraphError(f"undeclared endpoint {v!r}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "full_edges", tuple(sorted(edges)))
        object.__setattr__(self, "half_edges", tuple(tuple(h) for h in self.half_edges))
        object.__setattr__(self, "free_edges", tuple(self.free_edges))

    @classmethod
    def build(
        cls,
        vertices: Iterable[str] = (),
        edges: Iterable[Edge] = (),
        half: Iterable[str] = (),
        free: int = 0,
    ) -> LooseGraph:
        """Construct a graph, tagging half-edges ``h0, h1, ...`` and free edges ``f0, ...``."""
        half = list(half)
        return cls(
            vertices=tuple(vertices),
            full_edges=tuple(edges),
            half_edges=tuple((v, f"h{i}") for i, v in enumerate(half)),
            free_edges=tuple(f"f{i}" for i in range(free)),
        )

    def neighbors(self, v: str) -> list[str]:
        """Real neighbours of ``v`` in id order."""
        out = []
        for a, b in self.full_edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def half_tags(self, v: str) -> list[str]:
        return [t for u, t in self.half_edges if u == v]

    def completion_neighbors(self, v: str) -> list[str]:
        """Neighbours of ``v`` in the completion: real ones, then phantom endpoints."""
        return self.neighbors(v) + [half_phantom(t) for t in self.half_tags(v)]

    def __str__(self) -> str:
        return serialize_loose_graph(self).strip().replace("\n", "; ")


def degree(g: LooseGraph, v: str) -> int:
    """Number of full edges and half-edges at ``v``."""
    if v not in g.vertices:
        raise PreconditionError(f"unknown vertex {v!r}")
    return sum(v in e for e in g.full_edges) + sum(u == v for u, _ in g.half_edges)


def max_degree(g: LooseGraph) -> int:
    return max((degree(g, v) for v in g.vertices), default=0)


# -- parsing / serialization -------------------------------------------------


def parse_loose_graph(text: str) -> LooseGraph:
    """Parse ``.lg`` source text.

    >>> parse_loose_graph("v a\\nv b\\ne a b").full_edges
    (('a', 'b'),)
    """
    vertices: list[str] = []
    seen_v: set[str] = set()
    edges: list[Edge] = []
    seen_e: set[Edge] = set()
    half: list[str] = []
    free = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *args = line.split()
        for a in args:
            if not ID_RE.match(a):
                raise LooseGraphError(f"invalid identifier {a!r}", lineno)
        if kind == "v" and len(args) == 1:
            if args[0] in seen_v:
                raise LooseGraphError(f"duplicate vertex {args[0]!r}", lineno)
            seen_v.add(args[0])
            vertices.append(args[0])
        elif kind == "e" and len(args) == 2:
            u, w = args
            if u == w:
                raise LooseGraphError(f"loop at {u!r}", lineno)
            for x in (u, w):
                if x not in seen_v:
                    raise LooseGraphError(f"undeclared endpoint {x!r}", lineno)
            key = edge_key(u, w)
            if key in seen_e:
                raise LooseGraphError(f"duplicate full edge {u} {w}", lineno)
            seen_e.add(key)
            edges.append(key)
        elif kind == "h" and len(args) == 1:
            if args[0] not in seen_v:
                raise LooseGraphError(f"undeclared endpoint {args[0]!r}", lineno)
            half.append(args[0])
        elif kind == "f" and not args:
            free += 1
        else:
            raise LooseGraphError(f"syntax error: {raw.strip()!r}", lineno)
    return LooseGraph.build(vertices, edges, half, free)


def serialize_loose_graph(g: LooseGraph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.full_edges]
    lines += [f"h {v}" for v, _ in g.half_edges]
    lines += ["f"] * len(g.free_edges)
    return "".join(line + "\n" for line in lines)


# -- connectivity ------------------------------------------------------------


def _vertex_components(g: LooseGraph) -> list[list[str]]:
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v in g.full_edges:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[str] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def components(g: LooseGraph) -> list[LooseGraph]:
    """Connected components; vertex components first (by smallest id), then one per free edge."""
    out = []
    for comp in _vertex_components(g):
        cs = set(comp)
        out.append(
            LooseGraph(
                vertices=tuple(comp),
                full_edges=tuple(e for e in g.full_edges if e[0] in cs),
                half_edges=tuple(h for h in g.half_edges if h[0] in cs),
            )
        )
    out += [LooseGraph(free_edges=(t,)) for t in g.free_edges]
    return out


def is_connected(g: LooseGraph) -> bool:
    # the empty graph counts as connected
    return len(components(g)) <= 1


def is_loose_tree(g: LooseGraph) -> bool:
    return (
        len(g.vertices) >= 1
        and not g.free_edges
        and len(g.full_edges) == len(g.vertices) - 1
        and is_connected(g)
    )


def disjoint_union(g1: LooseGraph, g2: LooseGraph) -> LooseGraph:
    """Union of two graphs with disjoint vertex ids; loose-edge tags are re-prefixed."""
    if set(g1.vertices) & set(g2.vertices):
        raise PreconditionError("vertex ids overlap")
    return LooseGraph(
        vertices=g1.vertices + g2.vertices,
        full_edges=g1.full_edges + g2.full_edges,
        half_edges=tuple((v, "L" + t) for v, t in g1.half_edges)
        + tuple((v, "R" + t) for v, t in g2.half_edges),
        free_edges=tuple("L" + t for t in g1.free_edges) + tuple("R" + t for t in g2.free_edges),
    )


# -- resolution ----------------------------------------------------------------


def _fresh_tag(g: LooseGraph, base: str) -> str:
    used = {t for _, t in g.half_edges} | set(g.free_edges)
    tag, n = base, 0
    while tag in used:
        n += 1
        tag = f"{base}'{n}"
    return tag


def resolve_edge(g: LooseGraph, e: Edge) -> LooseGraph:
    """Delete the full edge ``e = {x, y}`` and attach one new half-edge at each of x and y."""
    key = edge_key(*e)
    if key not in g.full_edges:
        raise PreconditionError(f"edge {key} not present")
    x, y = key
    tx = _fresh_tag(g, f"{x}-{y}:{x}")
    partial = LooseGraph(g.vertices, g.full_edges, g.half_edges + ((x, tx),), g.free_edges)
    ty = _fresh_tag(partial, f"{x}-{y}:{y}")
    return LooseGraph(
        vertices=g.vertices,
        full_edges=tuple(f for f in g.full_edges if f != key),
        half_edges=g.half_edges + ((x, tx), (y, ty)),
        free_edges=g.free_edges,
    )


# -- spanning loose trees -------------------------------------------------------


@dataclass(frozen=True)
class SpanningSelection:
    tree_edges: tuple[Edge, ...]
    chords: tuple[Edge, ...]


def spanning_loose_tree(g: LooseGraph) -> SpanningSelection:
    """Breadth-first spanning tree from the smallest vertex id, neighbours taken in id order."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    tree: list[Edge] = []
    if g.vertices:
        root = g.vertices[0]
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    tree.append(edge_key(x, y))
                    queue.append(y)
    tset = set(tree)
    return SpanningSelection(
        tree_edges=tuple(sorted(tree)),
        chords=tuple(e for e in g.full_edges if e not in tset),
    )


def all_spanning_selections(g: LooseGraph) -> Iterator[SpanningSelection]:
    """Every spanning loose tree of a connected graph (chords in sorted order)."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    n = len(g.vertices)
    if n == 0:
        yield SpanningSelection((), ())
        return
    index = {v: i for i, v in enumerate(g.vertices)}
    for subset in combinations(g.full_edges, n - 1):
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        ok = True
        for u, v in subset:
            a, b = find(index[u]), find(index[v])
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            chosen = set(subset)
            yield SpanningSelection(
                tree_edges=tuple(subset),
                chords=tuple(e for e in g.full_edges if e not in chosen),
            )


def boundary_and_inner(g: LooseGraph) -> tuple[frozenset[str], frozenset[str]]:
    """Boundary (degree-1 vertices of the completion, phantoms included) and inner vertices."""
    if not is_loose_tree(g):
        raise PreconditionError("input is not a connected loose tree")
    boundary = {v for v in g.vertices if degree(g, v) == 1}
    boundary |= {half_phantom(t) for _, t in g.half_edges}
    inner = {v for v in g.vertices if degree(g, v) >= 2}
    return frozenset(boundary), frozenset(inner)
