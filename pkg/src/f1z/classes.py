"""Integer polynomials in the Lefschetz class L, tree classes, and interpolation."""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ConsistencyError, PreconditionError
from .graph import LooseGraph, degree, is_loose_tree


class ClassPolynomial:
    """Exact polynomial ``sum c_k L^k`` with integer coefficients.

    Immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            if int(v) != v:
                raise ConsistencyError(f"non-integer coefficient {v} at L^{k}")
            if v:
                c[int(k)] = int(v)
        self._c = dict(sorted(c.items()))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> ClassPolynomial:
        return cls({k: c})

    @classmethod
    def const(cls, c: int) -> ClassPolynomial:
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    def __getitem__(self, k: int) -> int:
        return self._c.get(k, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ClassPolynomial.const(other)
        return isinstance(other, ClassPolynomial) and self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = Counter(self._c)
        out.update(other._c)
        return ClassPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return ClassPolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: Counter = Counter()
        for i, a in self._c.items():
            for j, b in other._c.items():
                out[i + j] += a * b
        return ClassPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ClassPolynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, q: int) -> int:
        return evaluate(self, q)

    def __repr__(self):
        return f"ClassPolynomial({self._c})"

    def __str__(self):
        return format_class(self)

    def to_json(self) -> dict:
        return {"coeffs": {str(k): v for k, v in self._c.items()}}

    @classmethod
    def from_json(cls, data: dict | str) -> ClassPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(k): v for k, v in data["coeffs"].items()})


def _coerce(x) -> ClassPolynomial:
    if isinstance(x, ClassPolynomial):
        return x
    if isinstance(x, int):
        return ClassPolynomial.const(x)
    return NotImplemented


ZERO = ClassPolynomial()
ONE = ClassPolynomial.const(1)
L = ClassPolynomial.monomial(1)


def format_class(p: ClassPolynomial) -> str:
    """Human text in decreasing exponent order, e.g. ``2*L^2 - L + 3``."""
    if not p:
        return "0"
    parts = []
    for k in sorted(p.coeffs, reverse=True):
        c = p[k]
        mono = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def evaluate(p: ClassPolynomial, q: int) -> int:
    """Value at ``L = q``; exact, so only non-negative exponents are allowed unless q = +-1."""
    total = Fraction(0)
    for k, c in p.coeffs.items():
        total += c * Fraction(q) ** k
    if total.denominator != 1:
        raise PreconditionError("negative exponents do not evaluate to an integer here")
    return int(total)


def affine_class(n: int) -> ClassPolynomial:
    if n < 0:
        raise PreconditionError("n must be >= 0")
    return ClassPolynomial.monomial(n)


def projective_class(n: int) -> ClassPolynomial:
    if n < 0:
        raise PreconditionError("n must be >= 0")
    return ClassPolynomial({i: 1 for i in range(n + 1)})


def gm_class() -> ClassPolynomial:
    return L - 1


def tree_degree_data(t: LooseGraph) -> tuple[dict[int, int], int, int]:
    """``({d: n_d for d > 1}, E, I)`` as used by the closed tree formulas."""
    if not is_loose_tree(t):
        raise PreconditionError("input is not a connected loose tree with at least one vertex")
    degs = Counter(degree(t, v) for v in t.vertices)
    inner = {d: n for d, n in degs.items() if d > 1}
    return dict(sorted(inner.items())), degs.get(1, 0), sum(inner.values()) - 1


def tree_class(t: LooseGraph) -> ClassPolynomial:
    """Class of a loose tree: ``sum n_d L^d - I*L + I + E``.

    A lone vertex without edges is the point, class 1; the formula is not
    meant for it.
    """
    if len(t.vertices) == 1 and degree(t, t.vertices[0]) == 0 and not t.free_edges:
        return ONE
    inner, e, i = tree_degree_data(t)
    p = ClassPolynomial(inner)
    return p - i * L + (i + e)


# -- interpolation ----------------------------------------------------------


def interpolate_class(
    samples: Iterable[tuple[int, int]], degree_bound: int | None = None
) -> ClassPolynomial:
    """The integer polynomial through ``(q, count)`` samples.

    Uses all samples (Newton form over the rationals).  With ``degree_bound``
    given, at least ``degree_bound + 1`` samples are required and the result
    must not exceed that degree, so any extra sample acts as a held-out check.
    """
    samples = sorted(set(samples))
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ConsistencyError("conflicting counts for the same q")
    if degree_bound is not None and len(samples) < degree_bound + 1:
        raise PreconditionError(
            f"need {degree_bound + 1} samples for degree bound {degree_bound}, got {len(samples)}"
        )
    if not samples:
        return ZERO
    # divided differences
    coef = [Fraction(y) for _, y in samples]
    n = len(samples)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (X - xs[i]) + coef[i]
        nxt = [Fraction(0)] * n
        for k in range(n - 1):
            nxt[k + 1] += poly[k]
        for k in range(n):
            nxt[k] -= xs[i] * poly[k]
        nxt[0] += coef[i]
        poly = nxt
    bad = [c for c in poly if c.denominator != 1]
    if bad:
        raise ConsistencyError(f"counts are not an integer polynomial (coefficient {bad[0]})")
    result = ClassPolynomial({k: int(c) for k, c in enumerate(poly)})
    if degree_bound is not None and result.degree > degree_bound:
        raise ConsistencyError(
            f"interpolated degree {result.degree} exceeds bound {degree_bound}: counts not polynomial"
        )
    return result


def first_primes(n: int) -> list[int]:
    out: list[int] = []
    k = 2
    while len(out) < n:
        if all(k % p for p in out if p * p <= k):
            out.append(k)
        k += 1
    return out
