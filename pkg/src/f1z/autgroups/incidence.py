"""Point-line geometry of a lifted model and its combinatorial automorphism group."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..ambient import DEFAULT_BUDGET, AmbientModel, iter_points, member_points
from ..errors import BudgetExceeded

PROJECTIVE = "projective"
AFFINE = "complete-affine"


@dataclass(frozen=True)
class IncidenceGeometry:
    q: int
    points: tuple[tuple[int, ...], ...]
    lines: tuple[tuple[frozenset[int], str], ...]  # point indices + type

    def line_sets(self) -> set[frozenset[int]]:
        return {pts for pts, _ in self.lines}


def _span_line(a, b, q):
    pts = set()
    for s in range(q):
        v = [(s * x + y) % q for x, y in zip(a, b)]
        lead = next(c for c in v if c)
        inv = pow(lead, -1, q)
        pts.add(tuple(c * inv % q for c in v))
    pts.add(a)
    return frozenset(pts)


def incidence_geometry(m: AmbientModel, q: int, budget: int = DEFAULT_BUDGET) -> IncidenceGeometry:
    """Member points, plus every ambient line meeting them in q+1 (projective) or q (complete affine) points."""
    pts = tuple(p.coordinates for p in member_points(m, q, budget))
    index = {p: i for i, p in enumerate(pts)}
    every = [p.coordinates for p in iter_points(q, m.n)]
    if len(every) ** 2 > budget * 50:
        raise BudgetExceeded("enumerating lines", len(every) ** 2, budget * 50)
    seen: set[frozenset] = set()
    lines = []
    for a, b in combinations(every, 2):
        line = _span_line(a, b, q)
        if line in seen:
            continue
        seen.add(line)
        hit = frozenset(index[p] for p in line if p in index)
        if len(hit) == q + 1:
            lines.append((hit, PROJECTIVE))
        elif len(hit) == q:
            lines.append((hit, AFFINE))
    lines.sort(key=lambda x: (sorted(x[0]), x[1]))
    return IncidenceGeometry(q, pts, tuple(lines))


# -- colored graph automorphisms ------------------------------------------------


class ColoredGraph:
    """Undirected graph with vertex colours; automorphisms must preserve colours."""

    def __init__(self, n: int, edges, colours: Sequence):
        self.n = n
        self.adj = [set() for _ in range(n)]
        for u, v in edges:
            self.adj[u].add(v)
            self.adj[v].add(u)
        self.colours = list(colours)

    def refine(self, left: dict[int, int], right: dict[int, int]):
        """Jointly refine two individualized copies; returns (left colours, right colours) or None."""
        n = self.n
        base = sorted(set(self.colours), key=repr)
        rank = {c: i for i, c in enumerate(base)}
        cl = [(rank[self.colours[v]], left.get(v, -1)) for v in range(n)]
        cr = [(rank[self.colours[v]], right.get(v, -1)) for v in range(n)]
        while True:
            sl = [(cl[v], tuple(sorted(cl[u] for u in self.adj[v]))) for v in range(n)]
            sr = [(cr[v], tuple(sorted(cr[u] for u in self.adj[v]))) for v in range(n)]
            if sorted(sl) != sorted(sr):
                return None
            names = {s: i for i, s in enumerate(sorted(set(sl)))}
            nl = [names[s] for s in sl]
            nr = [names[s] for s in sr]
            if len(names) == len(set(cl)):
                return nl, nr
            cl, cr = nl, nr

    def _extends(self, pairs: list[tuple[int, int]]) -> dict[int, int] | None:
        left = {a: k for k, (a, _) in enumerate(pairs)}
        right = {b: k for k, (_, b) in enumerate(pairs)}
        res = self.refine(left, right)
        if res is None:
            return None
        cl, cr = res
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(cl):
            cells.setdefault(c, []).append(v)
        cell = min((c for c in cells if len(cells[c]) > 1), default=None)
        if cell is None:
            where = {c: v for v, c in enumerate(cr)}
            perm = {v: where[cl[v]] for v in range(self.n)}
            for u in range(self.n):
                if {perm[x] for x in self.adj[u]} != self.adj[perm[u]]:
                    return None
            return perm
        a = cells[cell][0]
        for b in (v for v, c in enumerate(cr) if c == cell):
            found = self._extends(pairs + [(a, b)])
            if found is not None:
                return found
        return None

    def automorphism_group_order(self, max_nodes: int = 1_000_000) -> int:
        """Exact order by walking a stabilizer chain: |G| = prod of base-point orbit lengths."""
        order = 1
        fixed: list[tuple[int, int]] = []
        calls = 0
        while True:
            ident = {a: k for k, (a, _) in enumerate(fixed)}
            cl, _ = self.refine(ident, ident)
            cells: dict[int, list[int]] = {}
            for v, c in enumerate(cl):
                cells.setdefault(c, []).append(v)
            cell = min((c for c in cells if len(cells[c]) > 1), default=None)
            if cell is None:
                return order
            a = cells[cell][0]
            orbit = 1
            known: list[dict[int, int]] = []
            reached = {a}
            for b in cells[cell][1:]:
                if b in reached:
                    orbit += 1
                    continue
                calls += 1
                if calls > max_nodes:
                    raise BudgetExceeded("automorphism search", calls, max_nodes)
                perm = self._extends(fixed + [(a, b)])
                if perm is not None:
                    orbit += 1
                    known.append(perm)
                    reached = _orbit(a, known)
            order *= orbit
            fixed.append((a, a))


def _orbit(a: int, perms: list[dict[int, int]]) -> set[int]:
    # orbit of a under the group generated by perms
    orb = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for p in perms:
            y = p[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


def geometry_graph(geom: IncidenceGeometry) -> ColoredGraph:
    npts = len(geom.points)
    edges = [(i, npts + j) for j, (pts, _) in enumerate(geom.lines) for i in pts]
    colours = ["point"] * npts + ["line"] * len(geom.lines)
    return ColoredGraph(npts + len(geom.lines), edges, colours)


def comb_aut_order(geom: IncidenceGeometry) -> int:
    """Order of the group of point permutations carrying lines onto lines.

    Points lying on no line are permuted freely among themselves.  Line types
    are not imposed; they are preserved anyway because sizes are.
    """
    return geometry_graph(geom).automorphism_group_order()


def preserves_lines(geom: IncidenceGeometry, perm: Sequence[int]) -> bool:
    """Whether a permutation of point indices maps the line set onto itself."""
    lines = geom.line_sets()
    return {frozenset(perm[i] for i in line) for line in lines} == lines
