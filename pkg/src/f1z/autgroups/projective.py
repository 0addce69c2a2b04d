"""Projective linear groups over prime fields: stabilizer search and closures.

Matrices are tuples of rows with entries in ``range(q)``, normalized so the
first nonzero entry in row-major order is 1; this picks one representative per
scalar class, so sets of normalized matrices are subsets of PGL(n, q).
Matrices act on column vectors: column ``j`` is the image of ``e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import BudgetExceeded

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]

DEFAULT_GROUP_BUDGET = 20_000_000
DEFAULT_ELEMENT_LIMIT = 200_000


def pgl_order(n: int, q: int) -> int:
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order // (q - 1)


def normalize_vector(v: Sequence[int], q: int) -> Vector:
    lead = next((c for c in v if c % q), 0)
    if not lead:
        raise ValueError("zero vector")
    inv = pow(lead, -1, q)
    return tuple(c * inv % q for c in v)


def normalize_matrix(a: Sequence[Sequence[int]], q: int) -> Matrix:
    flat = [c % q for row in a for c in row]
    lead = next((c for c in flat if c), 0)
    if not lead:
        raise ValueError("zero matrix")
    inv = pow(lead, -1, q)
    n = len(a[0])
    flat = [c * inv % q for c in flat]
    return tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(len(a)))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix, q: int) -> Matrix:
    n = len(b[0])
    cols = list(zip(*b))
    return normalize_matrix(
        [[sum(x * y for x, y in zip(row, cols[j])) % q for j in range(n)] for row in a], q
    )


def apply(a: Matrix, v: Sequence[int], q: int) -> Vector:
    return normalize_vector([sum(x * y for x, y in zip(row, v)) for row in a], q)


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Matrix sending ``e_j`` to ``e_perm[j]``."""
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for j, i in enumerate(perm):
        rows[i][j] = 1
    return tuple(tuple(r) for r in rows)


def diagonal_matrix(diag: Sequence[int], q: int) -> Matrix:
    n = len(diag)
    return normalize_matrix([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], q)


def primitive_root(q: int) -> int:
    if q == 2:
        return 1
    for g in range(2, q):
        if len({pow(g, k, q) for k in range(1, q)}) == q - 1:
            return g
    raise ValueError(q)


def torus_generators(n: int, q: int) -> list[Matrix]:
    """Per-coordinate rescalings generating the diagonal subgroup of PGL(n, q)."""
    g = primitive_root(q)
    if g == 1:
        return []
    return [diagonal_matrix([g if i == k else 1 for i in range(n)], q) for k in range(1, n)]


def _all_vectors(n: int, q: int) -> list[Vector]:
    out = [()]
    for _ in range(n):
        out = [v + (c,) for v in out for c in range(q)]
    return out[1:]  # drop zero


def stabilizer_elements(
    n: int,
    q: int,
    members: set[Vector],
    fixed: Iterable[Vector] = (),
    budget: int = DEFAULT_GROUP_BUDGET,
    element_limit: int = DEFAULT_ELEMENT_LIMIT,
) -> list[Matrix]:
    """Every element of PGL(n, q) mapping ``members`` onto itself and fixing each point of ``fixed``.

    Column-by-column backtracking: after columns ``0..j`` are chosen, every
    projective point supported on those coordinates has a determined image,
    which must keep its membership status (and be fixed when required).  A
    linear dependence among columns shows up as a point mapped to zero, so
    survivors are invertible.
    """
    required = pgl_order(n, q)
    if required > budget:
        raise BudgetExceeded(f"searching PGL({n},{q})", required, budget)
    fixed = set(fixed)
    vectors = _all_vectors(n, q)
    # points whose highest nonzero coordinate is j, as (point, in members, must be fixed)
    by_top: list[list[tuple[Vector, bool, bool]]] = [[] for _ in range(n)]
    for v in vectors:
        if v == normalize_vector(v, q):
            top = max(i for i, c in enumerate(v) if c)
            by_top[top].append((v, v in members, v in fixed))
    unit = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    cands = []
    for j in range(n):
        want = unit[j] in members
        pool = [v for v in vectors if (normalize_vector(v, q) in members) == want]
        if unit[j] in fixed:
            pool = [v for v in pool if normalize_vector(v, q) == unit[j]]
        if j == 0:
            pool = [v for v in pool if v == normalize_vector(v, q)]
        cands.append(pool)

    found: list[Matrix] = []
    cols: list[Vector] = []

    def image(p: Vector) -> list[int]:
        out = [0] * n
        for i, c in enumerate(p):
            if c:
                col = cols[i]
                for r in range(n):
                    out[r] += c * col[r]
        return [x % q for x in out]

    def search(j: int):
        if j == n:
            if len(found) >= element_limit:
                raise BudgetExceeded("stabilizer elements", len(found) + 1, element_limit)
            found.append(normalize_matrix(list(zip(*cols)), q))
            return
        for c in cands[j]:
            cols.append(c)
            ok = True
            for p, is_member, must_fix in by_top[j]:
                img = image(p)
                if not any(img):
                    ok = False
                    break
                img = normalize_vector(img, q)
                if (img in members) != is_member or (must_fix and img != p):
                    ok = False
                    break
            if ok:
                search(j + 1)
            cols.pop()

    search(0)
    return sorted(found)


def closure(gens: Iterable[Matrix], q: int, n: int, limit: int | None = None) -> set[Matrix]:
    gens = list(gens)
    elems = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mat_mul(g, a, q)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
                    if limit is not None and len(elems) > limit:
                        raise BudgetExceeded("group closure", len(elems), limit)
        frontier = nxt
    return elems


def generators_of(elements: Iterable[Matrix], q: int, n: int) -> list[Matrix]:
    """A small generating set, chosen greedily in sorted order."""
    elements = sorted(elements)
    target = len(elements)
    gens: list[Matrix] = []
    group = {identity(n)}
    for g in elements:
        if len(group) == target:
            break
        if g not in group:
            gens.append(g)
            group = closure(gens, q, n)
    return gens


@dataclass
class GroupReport:
    """A finite subgroup of PGL(n, q) given by its order and generators."""

    q: int
    n: int
    order: int
    generators: list[Matrix]
    notes: dict = field(default_factory=dict)
    elements: frozenset[Matrix] | None = field(default=None, repr=False, compare=False)

    def verify_closure(self) -> bool:
        return len(closure(self.generators, self.q, self.n, limit=self.order)) == self.order

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "dimension": self.n,
            "order": self.order,
            "generators": [[list(row) for row in g] for g in self.generators],
            "notes": self.notes,
        }


def report_from_elements(elements: Sequence[Matrix], q: int, n: int, **notes) -> GroupReport:
    return GroupReport(
        q=q,
        n=n,
        order=len(elements),
        generators=generators_of(elements, q, n),
        notes=dict(notes),
        elements=frozenset(elements),
    )
