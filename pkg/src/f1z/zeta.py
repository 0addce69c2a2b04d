"""F1-zeta functions and arithmetic zeta factorizations from class polynomials.

A class ``P = sum a_k L^k`` gives the F1-zeta function ``prod (t - k)^(-a_k)``
and the arithmetic zeta function ``prod zeta(s - k)^(a_k)``.  Only exponent
bookkeeping happens here; nothing is evaluated numerically.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .classes import ClassPolynomial, tree_degree_data
from .errors import PreconditionError
from .graph import LooseGraph, degree


@dataclass(frozen=True)
class ZetaDescriptor:
    """``factors`` are ``(shift, exponent)`` pairs with strictly increasing shifts."""

    factors: tuple[tuple[int, int], ...]
    kind: str = "f1"

    def __post_init__(self):
        shifts = [k for k, _ in self.factors]
        if shifts != sorted(set(shifts)):
            raise PreconditionError("shifts must be strictly increasing")
        if any(e == 0 for _, e in self.factors):
            raise PreconditionError("zero exponent in zeta descriptor")
        if any(k < 0 for k in shifts):
            raise PreconditionError("negative shift")

    @classmethod
    def from_exponents(cls, exps: dict[int, int], kind: str = "f1") -> ZetaDescriptor:
        return cls(tuple((k, e) for k, e in sorted(exps.items()) if e), kind)

    def to_json(self) -> dict:
        return {"factors": [[k, e] for k, e in self.factors]}


def _exponents(p: ClassPolynomial) -> dict[int, int]:
    if any(k < 0 for k in p.coeffs):
        raise PreconditionError("class polynomial has a negative exponent")
    return p.coeffs


def f1_zeta(p: ClassPolynomial) -> ZetaDescriptor:
    return ZetaDescriptor.from_exponents({k: -a for k, a in _exponents(p).items()})


def arithmetic_zeta(p: ClassPolynomial) -> ZetaDescriptor:
    return ZetaDescriptor.from_exponents(_exponents(p), kind="arithmetic")


def class_from_zeta(z: ZetaDescriptor) -> ClassPolynomial:
    sign = -1 if z.kind == "f1" else 1
    return ClassPolynomial({k: sign * e for k, e in z.factors})


def tree_zeta(t: LooseGraph) -> ZetaDescriptor:
    """Closed form for loose trees: ``(t-1)^I / t^(E+I) * prod_d (t-d)^(-n_d)``."""
    if len(t.vertices) == 1 and degree(t, t.vertices[0]) == 0 and not t.free_edges:
        return ZetaDescriptor(((0, -1),))
    inner, e, i = tree_degree_data(t)
    exps: Counter = Counter({1: i, 0: -(e + i)})
    for d, n in inner.items():
        exps[d] -= n
    return ZetaDescriptor.from_exponents(dict(exps))


# -- rendering ------------------------------------------------------------------


def _t_factor(k: int, e: int, latex: bool) -> str:
    base = "t" if k == 0 else f"(t-{k})"
    if e == 1:
        return base
    return f"{base}^{{{e}}}" if latex else f"{base}^{e}"


def _join(parts: list[str]) -> str:
    out = ""
    for p in parts:
        # a space after an exponent keeps "t^2 (t-2)" readable
        if out and (out[-1].isdigit() or out[-1] == "}"):
            out += " "
        out += p
    return out


def render_f1(z: ZetaDescriptor, latex: bool = False) -> str:
    """Fraction form, e.g. ``(t-1)/(t^3 (t-2)^2)``; ``latex`` gives ``\\frac{..}{..}``."""
    num = [_t_factor(k, e, latex) for k, e in z.factors if e > 0]
    den = [_t_factor(k, -e, latex) for k, e in z.factors if e < 0]
    if latex:
        top = "".join(num) or "1"
        if not den:
            return top
        return f"\\frac{{{top}}}{{{''.join(den)}}}"
    top = _join(num) or "1"
    if len(num) > 1:
        top = f"({top})"
    if not den:
        return top
    bottom = _join(den)
    if len(den) > 1:
        bottom = f"({bottom})"
    return f"{top}/{bottom}"


def render_product(z: ZetaDescriptor) -> str:
    """Factor list ``(t - k)^(e)`` in increasing shift order; ``1`` for the empty product."""
    if not z.factors:
        return "1"
    return " ".join(f"(t - {k})^({e})" for k, e in z.factors)


def _zeta_factor(k: int, e: int, latex: bool) -> str:
    arg = "s" if k == 0 else f"s-{k}"
    base = f"\\zeta({arg})" if latex else f"ζ({arg})"
    if e == 1:
        return base
    return f"{base}^{{{e}}}" if latex else f"{base}^{e}"


def render_arithmetic(z: ZetaDescriptor, latex: bool = False) -> str:
    """E.g. ``ζ(s)ζ(s-1)ζ(s-2)`` or ``ζ(s-1)/ζ(s)``."""
    num = "".join(_zeta_factor(k, e, latex) for k, e in z.factors if e > 0)
    den = "".join(_zeta_factor(k, -e, latex) for k, e in z.factors if e < 0)
    if not den:
        return num or "1"
    if latex:
        return f"\\frac{{{num or '1'}}}{{{den}}}"
    if den.count("ζ") > 1:
        den = f"({den})"
    return f"{num or '1'}/{den}"
