"""Loose graphs over F1: point models, Grothendieck classes, zeta functions and automorphisms."""

from __future__ import annotations

from .ambient import AmbientModel, ProjPoint, build_ambient, count_in_subspace, count_points, member
from .classes import ClassPolynomial, evaluate, format_class, interpolate_class, tree_class
from .errors import BudgetExceeded, ConsistencyError, F1zError, LooseGraphError, PreconditionError
from .graph import LooseGraph, parse_loose_graph, resolve_edge, serialize_loose_graph, spanning_loose_tree
from .surgery import class_of, pap_delta, surgery_class
from .zeta import ZetaDescriptor, arithmetic_zeta, f1_zeta, render_f1, tree_zeta

__version__ = "0.1.0"

__all__ = [
    "AmbientModel",
    "BudgetExceeded",
    "ClassPolynomial",
    "ConsistencyError",
    "F1zError",
    "LooseGraph",
    "LooseGraphError",
    "PreconditionError",
    "ProjPoint",
    "ZetaDescriptor",
    "arithmetic_zeta",
    "build_ambient",
    "class_of",
    "count_in_subspace",
    "count_points",
    "evaluate",
    "f1_zeta",
    "format_class",
    "interpolate_class",
    "member",
    "pap_delta",
    "parse_loose_graph",
    "render_f1",
    "resolve_edge",
    "serialize_loose_graph",
    "spanning_loose_tree",
    "surgery_class",
    "tree_class",
    "tree_zeta",
]
