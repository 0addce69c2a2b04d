"""Rational-point model of the scheme attached to a loose graph.

The ambient projective space has one coordinate per vertex of the completion
(real vertices in id order, then phantom endpoints in declaration order).  The
scheme is a union of coordinate-affine pieces: for each real vertex ``v`` the
points supported on ``{v} + completion-neighbours(v)`` with ``p_v != 0``, and for
each free edge the torus ``{[x:y] : x, y != 0}`` on its two phantoms.

Membership therefore depends only on the support of a point.  Two exact
counting routes are provided: brute-force enumeration of every normalized
point (the oracle) and a sum over member supports ``S`` of ``(q-1)^(|S|-1)``,
the number of points with support exactly ``S``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, PreconditionError
from .graph import LooseGraph, free_phantoms, half_phantom

DEFAULT_BUDGET = 2_000_000
_CHUNK = 1 << 18


def projective_size(n: int, q: int) -> int:
    """Number of points of PG(n-1, q)."""
    return 0 if n <= 0 else (q**n - 1) // (q - 1)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


def _check_prime(q: int) -> None:
    if not is_prime(q):
        raise PreconditionError(f"q={q} is not prime")


@dataclass(frozen=True)
class ProjPoint:
    """A point of projective space over F_q, normalized so its first nonzero entry is 1."""

    q: int
    coordinates: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) % self.q for c in self.coordinates)
        lead = next((c for c in coords if c), 0)
        if not lead:
            raise PreconditionError("the zero vector is not a projective point")
        inv = pow(lead, -1, self.q)
        object.__setattr__(self, "coordinates", tuple(c * inv % self.q for c in coords))

    @property
    def support_mask(self) -> int:
        return sum(1 << i for i, c in enumerate(self.coordinates) if c)


@dataclass(frozen=True, eq=False)
class AmbientModel:
    coords: tuple[str, ...]
    support: dict[str, frozenset[str]]
    free_pairs: tuple[tuple[str, str], ...]
    index: dict[str, int] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def vertices(self) -> list[str]:
        return list(self.support)

    def mask_of(self, labels: Iterable[str]) -> int:
        m = 0
        for c in labels:
            if c not in self.index:
                raise PreconditionError(f"unknown coordinate {c!r}")
            m |= 1 << self.index[c]
        return m

    @cached_property
    def pieces(self) -> tuple[tuple[int, int], ...]:
        """``(anchor mask, allowed-support mask)`` per affine piece: vertices first, then free pairs."""
        out = [(1 << self.index[v], self.mask_of(s)) for v, s in self.support.items()]
        out += [(self.mask_of(p),) * 2 for p in self.free_pairs]
        return tuple(out)

    def is_member_support(self, mask: int) -> bool:
        if not mask:
            return False
        for anchor, allowed in self.pieces:
            if mask & anchor == anchor and mask & ~allowed == 0:
                return True
        return False

    def member_supports(self, window_mask: int | None = None) -> frozenset[int]:
        """All supports of member points lying inside ``window_mask``."""
        if window_mask is None:
            window_mask = (1 << self.n) - 1
        found: set[int] = set()
        for anchor, allowed in self.pieces:
            allowed &= window_mask
            if anchor & ~allowed:
                continue
            free_bits = allowed & ~anchor
            sub = free_bits
            while True:
                found.add(anchor | sub)
                if sub == 0:
                    break
                sub = (sub - 1) & free_bits
        return frozenset(found)


def build_ambient(g: LooseGraph) -> AmbientModel:
    coords = list(g.vertices)
    coords += [half_phantom(t) for _, t in g.half_edges]
    pairs = [free_phantoms(t) for t in g.free_edges]
    for p in pairs:
        coords += p
    support = {v: frozenset([v, *g.completion_neighbors(v)]) for v in g.vertices}
    return AmbientModel(
        coords=tuple(coords),
        support=support,
        free_pairs=tuple(pairs),
        index={c: i for i, c in enumerate(coords)},
    )


def member(m: AmbientModel, p: ProjPoint) -> bool:
    if len(p.coordinates) != m.n:
        raise PreconditionError(f"point has {len(p.coordinates)} coordinates, model has {m.n}")
    return m.is_member_support(p.support_mask)


# -- enumeration ------------------------------------------------------------


def _window_positions(m: AmbientModel, window: Iterable[str] | None) -> list[int]:
    if window is None:
        return list(range(m.n))
    return sorted({m.index[c] if c in m.index else _unknown(c) for c in window})


def _unknown(c):
    raise PreconditionError(f"unknown coordinate {c!r}")


def _enumerate_count(m: AmbientModel, q: int, positions: Sequence[int]) -> int:
    """Test every normalized point of the coordinate subspace on ``positions``."""
    pieces = np.array(m.pieces, dtype=np.int64).reshape(-1, 2)
    total = 0
    k = len(positions)
    for lead in range(k):
        tail = positions[lead + 1 :]
        nt = len(tail)
        size = q**nt
        for start in range(0, size, _CHUNK):
            idx = np.arange(start, min(size, start + _CHUNK), dtype=np.int64)
            mask = np.full(idx.shape, 1 << positions[lead], dtype=np.int64)
            rest = idx.copy()
            for pos in tail:
                rest, digit = np.divmod(rest, q)
                mask |= (digit != 0).astype(np.int64) << pos
            hit = np.zeros(idx.shape, dtype=bool)
            for anchor, allowed in pieces:
                hit |= ((mask & anchor) == anchor) & ((mask & ~allowed) == 0)
            total += int(hit.sum())
    return total


def _strata_count(m: AmbientModel, q: int, positions: Sequence[int]) -> int:
    window = sum(1 << i for i in positions)
    hist: dict[int, int] = {}
    for s in m.member_supports(window):
        k = s.bit_count()
        hist[k] = hist.get(k, 0) + 1
    return sum(c * (q - 1) ** (k - 1) for k, c in hist.items())


def count_in_subspace(
    m: AmbientModel,
    window: Iterable[str] | None,
    q: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "enumerate",
) -> int:
    """Member points whose nonzero coordinates all lie in ``window``.

    ``method`` is ``"enumerate"`` (brute force, raises :class:`BudgetExceeded`),
    ``"strata"`` (sum over member supports) or ``"auto"`` (enumerate when the
    subspace fits the budget, strata otherwise).
    """
    _check_prime(q)
    positions = _window_positions(m, window)
    required = projective_size(len(positions), q)
    if method == "auto":
        method = "enumerate" if required <= budget else "strata"
    if method == "enumerate":
        if required > budget:
            raise BudgetExceeded(f"enumerating PG({len(positions) - 1},{q})", required, budget)
        return _enumerate_count(m, q, positions)
    if method == "strata":
        return _strata_count(m, q, positions)
    raise ValueError(f"unknown counting method {method!r}")


def count_points(
    m: AmbientModel, q: int, budget: int = DEFAULT_BUDGET, method: str = "enumerate"
) -> int:
    """Exact number of F_q-rational points of the model."""
    return count_in_subspace(m, None, q, budget, method)


def iter_points(q: int, n: int, positions: Sequence[int] | None = None) -> Iterator[ProjPoint]:
    """All points of PG(n-1, q) supported on ``positions`` (default: all), in lexicographic order."""
    if positions is None:
        positions = range(n)
    positions = list(positions)
    for lead in range(len(positions)):
        tail = positions[lead + 1 :]
        for digits in itertools.product(range(q), repeat=len(tail)):
            v = [0] * n
            v[positions[lead]] = 1
            for pos, d in zip(tail, digits):
                v[pos] = d
            yield ProjPoint(q, tuple(v))


def member_points(m: AmbientModel, q: int, budget: int = DEFAULT_BUDGET) -> list[ProjPoint]:
    _check_prime(q)
    required = projective_size(m.n, q)
    if required > budget:
        raise BudgetExceeded(f"listing PG({m.n - 1},{q})", required, budget)
    return [p for p in iter_points(q, m.n) if m.is_member_support(p.support_mask)]


# -- local structure ------------------------------------------------------------


def _piece_of(m: AmbientModel, v: str) -> tuple[int, int]:
    if v not in m.support:
        raise PreconditionError(f"unknown vertex {v!r}")
    return 1 << m.index[v], m.mask_of(m.support[v])


def _pieces_meet(m: AmbientModel, a: tuple[int, int], b: tuple[int, int], q: int) -> bool:
    anchors = a[0] | b[0]
    allowed = a[1] & b[1]
    positions = [i for i in range(m.n) if allowed >> i & 1]
    for p in iter_points(q, m.n, positions):
        s = p.support_mask
        if s & anchors == anchors and m.is_member_support(s):
            return True
    return False


def local_intersection_nonempty(m: AmbientModel, u: str, v: str, q: int) -> bool:
    """Whether the local affine pieces of ``u`` and ``v`` share an F_q-point."""
    if u == v:
        raise PreconditionError("vertices must differ")
    _check_prime(q)
    return _pieces_meet(m, _piece_of(m, u), _piece_of(m, v), q)


def local_piece_count(m: AmbientModel, v: str, q: int) -> int:
    """Points of the affine piece at ``v``; equals q**degree(v)."""
    anchor, allowed = _piece_of(m, v)
    positions = [i for i in range(m.n) if allowed >> i & 1]
    return sum(
        1
        for p in iter_points(q, m.n, positions)
        if p.support_mask & anchor and m.is_member_support(p.support_mask)
    )


def model_components(m: AmbientModel, q: int) -> int:
    """Connected components of the model: affine pieces glued whenever they share a point."""
    pieces = list(m.pieces)
    parent = list(range(len(pieces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(pieces)), 2):
        if find(i) != find(j) and _pieces_meet(m, pieces[i], pieces[j], q):
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(pieces))})
