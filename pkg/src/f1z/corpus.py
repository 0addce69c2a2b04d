"""Test corpora: exhaustive small loose trees and small graphs."""

from __future__ import annotations

import itertools
import string
from typing import Iterator

import networkx as nx

from .autgroups.trees import canonical_code
from .graph import LooseGraph, is_loose_tree


def _name(i: int) -> str:
    return string.ascii_lowercase[i] if i < 26 else f"v{i}"


def from_networkx(g: nx.Graph, half: dict[int, int] | None = None) -> LooseGraph:
    nodes = sorted(g.nodes)
    name = {v: _name(i) for i, v in enumerate(nodes)}
    hs = [name[v] for v in nodes for _ in range((half or {}).get(v, 0))]
    return LooseGraph.build(
        [name[v] for v in nodes], [(name[u], name[v]) for u, v in g.edges], hs
    )


def plain_trees(n: int) -> Iterator[nx.Graph]:
    if n == 1:
        g = nx.Graph()
        g.add_node(0)
        yield g
    else:
        yield from nx.nonisomorphic_trees(n)


def loose_tree_corpus(
    max_vertices: int = 8, max_degree: int = 4, max_half: int = 2
) -> list[LooseGraph]:
    """Connected loose trees up to isomorphism: every unlabeled tree with at most
    ``max_vertices`` vertices, decorated with up to ``max_half`` half-edges per vertex,
    keeping total degree <= ``max_degree``."""
    out = []
    for n in range(1, max_vertices + 1):
        for tree in plain_trees(n):
            if max(dict(tree.degree).values(), default=0) > max_degree:
                continue
            nodes = sorted(tree.nodes)
            ranges = [range(min(max_half, max_degree - tree.degree[v]) + 1) for v in nodes]
            seen = set()
            for deco in itertools.product(*ranges):
                g = from_networkx(tree, dict(zip(nodes, deco)))
                key = canonical_code(g)
                if key not in seen:
                    seen.add(key)
                    out.append(g)
    return out


def graph_corpus(max_vertices: int = 6, connected: bool = True) -> list[LooseGraph]:
    """Every simple graph with 1..max_vertices vertices (max 7), up to isomorphism."""
    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_vertices:
            continue
        if connected and not nx.is_connected(g):
            continue
        out.append(from_networkx(g))
    return out


def loose_extras() -> list[LooseGraph]:
    """Hand-picked loose graphs with free edges, half-edges on cycles, and unions."""
    tri = [("a", "b"), ("b", "c"), ("a", "c")]
    return [
        LooseGraph(),
        LooseGraph.build(free=1),
        LooseGraph.build(free=2),
        LooseGraph.build("a"),
        LooseGraph.build("a", half=["a"]),
        LooseGraph.build("a", free=1),
        LooseGraph.build("ab", [("a", "b")], free=1),
        LooseGraph.build("abc", tri, ["a"]),
        LooseGraph.build("abc", tri, ["a", "a", "b"]),
        LooseGraph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")], ["a", "c"]),
        LooseGraph.build("abcd", tri + [("c", "d")], ["d", "d"]),
        LooseGraph.build("abcde", tri + [("d", "e")], ["d"]),
    ]


def standard_corpus() -> list[LooseGraph]:
    """Corpus used by the invariant checks: all connected graphs on <= 6 vertices,
    all graphs (connected or not) on <= 4 vertices, loose trees on <= 6 vertices,
    and the loose extras."""
    out, seen = [], set()
    for g in (
        graph_corpus(6)
        + graph_corpus(4, connected=False)
        + loose_tree_corpus(6, 4, 2)
        + loose_extras()
    ):
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out


def is_corpus_tree(g: LooseGraph) -> bool:
    """Connected loose trees with at least one vertex (the tree formula's domain)."""
    return bool(g.vertices) and is_loose_tree(g)
