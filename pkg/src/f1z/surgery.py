"""Classes of general loose graphs by surgery.

All chords of a spanning loose tree are resolved, the resulting loose tree is
handled by the closed formula, and the chords are then put back one at a time.
Each re-attachment changes the class only inside the projective window spanned
by the closed unit balls around the chord's endpoints, so the change is
obtained from windowed point counts at enough primes, interpolated exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .ambient import DEFAULT_BUDGET, build_ambient, count_in_subspace, count_points
from .classes import (
    ZERO,
    ClassPolynomial,
    first_primes,
    gm_class,
    interpolate_class,
    tree_class,
)
from .errors import BudgetExceeded, PreconditionError
from .graph import (
    Edge,
    LooseGraph,
    SpanningSelection,
    all_spanning_selections,
    components,
    edge_key,
    half_phantom,
    is_connected,
    is_loose_tree,
    resolve_edge,
    spanning_loose_tree,
)

# Windows with more points than this are counted by strata rather than enumeration.
SURGERY_ENUM_BUDGET = 20_000


def _window_for(g: LooseGraph, real: set[str]) -> tuple[str, ...]:
    m = build_ambient(g)
    labels = set(real)
    labels |= {half_phantom(t) for v, t in g.half_edges if v in real}
    return tuple(c for c in m.coords if c in labels)


def _ball_union(g: LooseGraph, e: Edge) -> set[str]:
    key = edge_key(*e)
    if key not in g.full_edges:
        raise PreconditionError(f"edge {key} not present")
    x, y = key
    return {x, y, *g.neighbors(x), *g.neighbors(y)}


def local_window(g: LooseGraph, e: Edge) -> tuple[str, ...]:
    """Coordinates spanning the window of the edge ``e = xy``.

    Real vertices within distance 1 of x or y, plus the phantom endpoints of
    the half-edges at those vertices, in ambient coordinate order.
    """
    return _window_for(g, _ball_union(g, e))


def _windows(g_with: LooseGraph, g_without: LooseGraph, e: Edge):
    real = _ball_union(g_with, e)
    return _window_for(g_with, real), _window_for(g_without, real)


def _window_class(g, window, primes, budget, method) -> ClassPolynomial:
    m = build_ambient(g)
    bound = max(len(window) - 1, 0)
    if len(primes) < bound + 2:
        raise PreconditionError(f"need {bound + 2} primes for a window of {len(window)} coordinates")
    samples = [(q, count_in_subspace(m, window, q, budget, method)) for q in primes]
    return interpolate_class(samples, degree_bound=bound)


def pap_delta(
    g_with: LooseGraph,
    g_without: LooseGraph,
    e: Edge,
    primes: Sequence[int] | None = None,
    budget: int = SURGERY_ENUM_BUDGET,
    method: str = "auto",
) -> ClassPolynomial:
    """``[with] - [without]`` computed inside the window of ``e`` only.

    ``g_without`` must be ``resolve_edge(g_with, e)``.  Each side's windowed
    counts are interpolated with degree bound ``|window| - 1`` from at least
    one more prime than needed; the extra prime is a consistency check.
    """
    return _pap_delta(g_with, g_without, e, primes, budget, method)[0]


def _pap_delta(g_with, g_without, e, primes, budget, method):
    if resolve_edge(g_with, e) != g_without:
        raise PreconditionError("second graph is not the resolution of the first along e")
    w_with, w_without = _windows(g_with, g_without, e)
    if primes is None:
        primes = first_primes(len(w_without) + 1)
    delta = _window_class(g_with, w_with, primes, budget, method) - _window_class(
        g_without, w_without, primes, budget, method
    )
    return delta, w_with, w_without


@dataclass(frozen=True)
class SurgeryStep:
    edge: Edge
    window: tuple[str, ...]
    window_resolved: tuple[str, ...]
    class_before: ClassPolynomial
    class_after: ClassPolynomial
    delta: ClassPolynomial

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "window": list(self.window),
            "window_resolved": list(self.window_resolved),
            "class_before": self.class_before.to_json()["coeffs"],
            "class_after": self.class_after.to_json()["coeffs"],
            "delta": self.delta.to_json()["coeffs"],
        }


@dataclass(frozen=True)
class SurgeryTrace:
    tree_stage: ClassPolynomial
    steps: tuple[SurgeryStep, ...] = field(default=())
    final_class: ClassPolynomial = ZERO

    def to_json(self) -> dict:
        return {
            "tree_stage": self.tree_stage.to_json()["coeffs"],
            "steps": [s.to_json() for s in self.steps],
            "final_class": self.final_class.to_json()["coeffs"],
        }


def surgery_class(
    g: LooseGraph,
    selection: SpanningSelection | None = None,
    resolution_order: Sequence[Edge] | None = None,
    primes: Sequence[int] | None = None,
    budget: int = SURGERY_ENUM_BUDGET,
    method: str = "auto",
) -> tuple[ClassPolynomial, SurgeryTrace]:
    """Class of a connected loose graph.

    Chords are resolved in ``resolution_order`` (default: the selection's chord
    order) and re-attached in the reverse order.
    """
    if not is_connected(g):
        raise PreconditionError("surgery needs a connected graph")
    if not g.vertices:
        p = gm_class() if g.free_edges else ZERO
        return p, SurgeryTrace(tree_stage=p, final_class=p)
    if selection is None:
        selection = spanning_loose_tree(g)
    chords = list(selection.chords if resolution_order is None else resolution_order)
    if sorted(edge_key(*c) for c in chords) != sorted(selection.chords):
        raise PreconditionError("resolution order must be a permutation of the chords")

    stages = [g]
    for c in chords:
        stages.append(resolve_edge(stages[-1], c))
    current = tree_class(stages[-1])
    tree_stage = current
    steps = []
    for k in range(len(chords) - 1, -1, -1):
        delta, w, w_res = _pap_delta(stages[k], stages[k + 1], chords[k], primes, budget, method)
        after = current + delta
        steps.append(SurgeryStep(edge_key(*chords[k]), w, w_res, current, after, delta))
        current = after
    return current, SurgeryTrace(tree_stage, tuple(steps), current)


def surgery_stages(g: LooseGraph, selection: SpanningSelection | None = None):
    """``[(graph, resolved graph, edge), ...]`` for every step of the default surgery."""
    if selection is None:
        selection = spanning_loose_tree(g)
    out, cur = [], g
    for c in selection.chords:
        nxt = resolve_edge(cur, c)
        out.append((cur, nxt, c))
        cur = nxt
    return out


def pap_identity_counts(
    g_with: LooseGraph,
    g_without: LooseGraph,
    e: Edge,
    q: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
) -> tuple[int, int]:
    """``(global count difference, windowed count difference)`` at one prime."""
    w_with, w_without = _windows(g_with, g_without, e)
    m1, m2 = build_ambient(g_with), build_ambient(g_without)
    glob = count_points(m1, q, budget, method) - count_points(m2, q, budget, method)
    loc = count_in_subspace(m1, w_with, q, budget, method) - count_in_subspace(
        m2, w_without, q, budget, method
    )
    return glob, loc


def spanning_tree_classes(
    g: LooseGraph, max_runs: int = 5000, **kwargs
) -> set[ClassPolynomial]:
    """Surgery results over every spanning tree and every chord order."""
    selections = list(all_spanning_selections(g))
    runs = sum(math.factorial(len(s.chords)) for s in selections)
    if runs > max_runs:
        raise BudgetExceeded("spanning-tree independence runs", runs, max_runs)
    results = set()
    for sel in selections:
        for order in itertools.permutations(sel.chords):
            results.add(surgery_class(g, sel, order, **kwargs)[0])
    return results


def verify_spanning_tree_independence(g: LooseGraph, max_runs: int = 5000, **kwargs) -> bool:
    return len(spanning_tree_classes(g, max_runs, **kwargs)) == 1


def component_classes(g: LooseGraph, **kwargs) -> list[tuple[LooseGraph, ClassPolynomial, SurgeryTrace | None]]:
    """Class of each connected component: closed formula for loose trees, surgery otherwise."""
    out = []
    for comp in components(g):
        if not comp.vertices:
            out.append((comp, gm_class(), None))
        elif is_loose_tree(comp):
            out.append((comp, tree_class(comp), None))
        else:
            p, trace = surgery_class(comp, **kwargs)
            out.append((comp, p, trace))
    return out


def class_of(g: LooseGraph, **kwargs) -> ClassPolynomial:
    """Class of any loose graph (additive over components; the empty graph gives 0)."""
    return sum((p for _, p, _ in component_classes(g, **kwargs)), ZERO)
