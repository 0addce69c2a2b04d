"""Command-line front end: ``f1z class|zeta|count|surgery|verify|aut FILE [options]``.

Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import autgroups
from .ambient import DEFAULT_BUDGET, build_ambient, count_points, is_prime
from .classes import ZERO, evaluate, format_class
from .errors import BudgetExceeded, ConsistencyError, F1zError, LooseGraphError, PreconditionError
from .graph import LooseGraph, boundary_and_inner, is_loose_tree, parse_loose_graph
from .surgery import (
    component_classes,
    pap_identity_counts,
    spanning_tree_classes,
    surgery_stages,
)
from .zeta import arithmetic_zeta, f1_zeta, render_arithmetic, render_f1

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_CONSISTENCY = 0, 2, 3, 4

COMMANDS = ("class", "zeta", "count", "surgery", "verify", "aut")


@dataclass(frozen=True)
class CliConfig:
    command: str
    path: Path
    q: int = 2
    primes: tuple[int, ...] | None = None
    budget: int = DEFAULT_BUDGET
    method: str = "enumerate"
    json: bool = False
    trace: bool = False
    latex: bool = False

    def __post_init__(self):
        if self.budget <= 0:
            raise PreconditionError("--budget must be positive")
        if self.primes is not None:
            if list(self.primes) != sorted(set(self.primes)):
                raise PreconditionError("--primes must be distinct and increasing")
            if not all(is_prime(p) for p in self.primes):
                raise PreconditionError("--primes must all be prime")
        if not is_prime(self.q):
            raise PreconditionError(f"--q {self.q} is not prime")


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="f1z", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", type=Path, help="loose graph in .lg format")
    p.add_argument("--q", type=int, default=2, help="field order for count/aut (prime)")
    p.add_argument("--primes", type=_parse_primes, help="comma-separated primes, e.g. 2,3,5")
    p.add_argument("--budget", type=int, default=None, help="enumeration budget")
    p.add_argument(
        "--method",
        choices=("enumerate", "strata", "auto"),
        default="enumerate",
        help="point counting route for `count`",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true", help="include surgery traces")
    p.add_argument("--latex", action="store_true", help="LaTeX rendering for `zeta`")
    return p


def _label(comp: LooseGraph) -> str:
    if not comp.vertices:
        return "free edge"
    return ",".join(comp.vertices)


def _surgery_kwargs(cfg: CliConfig) -> dict:
    kw = {}
    if cfg.primes is not None:
        kw["primes"] = cfg.primes
    return kw


def _classes(g: LooseGraph, cfg: CliConfig):
    comps = component_classes(g, **_surgery_kwargs(cfg))
    total = sum((p for _, p, _ in comps), ZERO)
    return comps, total


def _route(comp, trace) -> str:
    if not comp.vertices:
        return "multiplicative group"
    return "surgery" if trace is not None else "tree formula"


def _trace_lines(trace) -> list[str]:
    lines = [f"  tree stage: {format_class(trace.tree_stage)}"]
    for s in trace.steps:
        lines.append(
            f"  re-attach {s.edge[0]}-{s.edge[1]}: window {{{', '.join(s.window)}}}"
            f" delta {format_class(s.delta)} -> {format_class(s.class_after)}"
        )
    return lines


def cmd_class(g: LooseGraph, cfg: CliConfig, force_trace: bool = False):
    comps, total = _classes(g, cfg)
    show_trace = cfg.trace or force_trace
    if cfg.json:
        out = {"components": [], "total": total.to_json()}
        for comp, p, trace in comps:
            entry = {
                "vertices": list(comp.vertices),
                "free_edges": len(comp.free_edges),
                "route": _route(comp, trace),
                "class": p.to_json(),
            }
            if show_trace and trace is not None:
                entry["trace"] = trace.to_json()
            out["components"].append(entry)
        return out, EXIT_OK
    lines = []
    if len(comps) == 1 and not show_trace:
        lines.append(format_class(total))
    else:
        for comp, p, trace in comps:
            lines.append(f"component {_label(comp)}: {format_class(p)}")
            if show_trace and trace is not None:
                lines += _trace_lines(trace)
        lines.append(f"total: {format_class(total)}")
    return "\n".join(lines), EXIT_OK


def cmd_zeta(g: LooseGraph, cfg: CliConfig):
    _, total = _classes(g, cfg)
    z = f1_zeta(total)
    text = render_f1(z, latex=cfg.latex)
    if cfg.json:
        a = arithmetic_zeta(total)
        return {
            "class": total.to_json(),
            "f1_zeta": z.to_json(),
            "arithmetic_zeta": a.to_json(),
            "text": text,
            "arithmetic_text": render_arithmetic(a, latex=cfg.latex),
        }, EXIT_OK
    return text, EXIT_OK


def cmd_count(g: LooseGraph, cfg: CliConfig):
    m = build_ambient(g)
    qs = cfg.primes or (cfg.q,)
    counts = {q: count_points(m, q, cfg.budget, cfg.method) for q in qs}
    if cfg.json:
        return {
            "method": cfg.method,
            "counts": [{"q": q, "count": c} for q, c in counts.items()],
        }, EXIT_OK
    if len(counts) == 1:
        return str(next(iter(counts.values()))), EXIT_OK
    return "\n".join(f"q={q}: {c}" for q, c in counts.items()), EXIT_OK


def cmd_verify(g: LooseGraph, cfg: CliConfig):
    """Oracle equality, affection-principle locality and spanning-tree independence."""
    qs = cfg.primes or (2, 3)
    checks: list[dict] = []

    def record(name, ok, detail=""):
        checks.append({"check": name, "status": ok, "detail": detail})

    comps, total = _classes(g, cfg)
    m = build_ambient(g)
    for q in qs:
        n = count_points(m, q, cfg.budget, "enumerate")
        v = evaluate(total, q)
        record(f"oracle q={q}", "pass" if n == v else "fail", f"class {v}, points {n}")
    f1 = evaluate(total, 1)
    record("F1 points", "pass" if f1 == len(g.vertices) else "fail", f"{f1} vs {len(g.vertices)} vertices")
    for comp, _, trace in comps:
        label = _label(comp)
        if trace is None:
            record(f"locality [{label}]", "vacuous", "no chords")
            record(f"independence [{label}]", "vacuous", "single spanning tree")
            continue
        bad = []
        for gw, gwo, e in surgery_stages(comp):
            for q in qs:
                glob, loc = pap_identity_counts(gw, gwo, e, q, cfg.budget, "enumerate")
                if glob != loc:
                    bad.append(f"{e[0]}-{e[1]} q={q}: {glob} != {loc}")
        record(f"locality [{label}]", "fail" if bad else "pass", "; ".join(bad))
        found = spanning_tree_classes(comp, **_surgery_kwargs(cfg))
        record(
            f"independence [{label}]",
            "pass" if len(found) == 1 else "fail",
            ", ".join(sorted(format_class(p) for p in found)),
        )
    failed = any(c["status"] == "fail" for c in checks)
    code = EXIT_CONSISTENCY if failed else EXIT_OK
    if cfg.json:
        return {"checks": checks, "ok": not failed}, code
    lines = [f"{c['check']}: {c['status']}" + (f" ({c['detail']})" if c["detail"] else "") for c in checks]
    return "\n".join(lines), code


def cmd_aut(g: LooseGraph, cfg: CliConfig):
    q = cfg.q
    budget = cfg.budget if cfg.budget != DEFAULT_BUDGET else autgroups.DEFAULT_GROUP_BUDGET
    m = build_ambient(g)
    full = autgroups.brute_force_proj_aut(m, q, budget)
    out: dict = {"q": q, "projective": full.to_json(), "structure": None, "notes": []}
    code = EXIT_OK
    if not is_loose_tree(g):
        out["notes"].append("structural check skipped: the tree theorems only cover loose trees")
    else:
        _, inner = boundary_and_inner(g)
        inner = sorted(inner)
        s = {"inner": inner, "s_w": {}, "decomposition": None, "inner_tree_stable": None}
        for w in inner:
            params = autgroups.sw_params(g, w)
            rep = autgroups.s_w_bruteforce(m, w, q, inner, budget)
            s["s_w"][w] = {
                "case": params.symbol,
                "e": params.e,
                "l": params.l,
                "i": params.i,
                "order": rep.order,
            }
        if len(inner) >= 2:
            s["decomposition"] = autgroups.decomposition_check(g, q, budget)
            s["inner_tree_stable"] = autgroups.inner_tree_stability_check(g, q, budget)
            if not (s["decomposition"] and s["inner_tree_stable"]):
                code = EXIT_CONSISTENCY
        else:
            out["notes"].append(f"decomposition skipped: needs |I| >= 2, have {len(inner)}")
        out["structure"] = s
    if cfg.json:
        return out, code
    lines = [f"projective automorphism group over F_{q}: order {full.order}"]
    lines.append(f"generators: {len(full.generators)}")
    s = out["structure"]
    if s is not None:
        lines.append(f"inner vertices: {', '.join(s['inner']) or '-'}")
        for w, d in s["s_w"].items():
            lines.append(
                f"S({w}) [{d['case']} e={d['e']} l={d['l']} i={d['i']}]: order {d['order']}"
            )
        if s["decomposition"] is not None:
            lines.append("decomposition: " + ("verified" if s["decomposition"] else "NOT verified"))
            lines.append(
                "inner tree stabilized: " + ("verified" if s["inner_tree_stable"] else "NOT verified")
            )
    lines += out["notes"]
    return "\n".join(lines), code


HANDLERS = {
    "class": cmd_class,
    "zeta": cmd_zeta,
    "count": cmd_count,
    "surgery": lambda g, cfg: cmd_class(g, cfg, force_trace=True),
    "verify": cmd_verify,
    "aut": cmd_aut,
}


def run(argv: list[str] | None = None) -> tuple[str, int]:
    """Execute a command and return ``(stdout text, exit code)``."""
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(
            command=args.command,
            path=args.file,
            q=args.q,
            primes=args.primes,
            budget=args.budget if args.budget is not None else DEFAULT_BUDGET,
            method=args.method,
            json=args.json,
            trace=args.trace,
            latex=args.latex,
        )
        g = parse_loose_graph(cfg.path.read_text(encoding="utf-8"))
        result, code = HANDLERS[cfg.command](g, cfg)
    except OSError as exc:
        return _error("input", str(exc), args.json), EXIT_INPUT
    except (LooseGraphError, PreconditionError) as exc:
        return _error("input", str(exc), args.json), EXIT_INPUT
    except BudgetExceeded as exc:
        return _error("budget", str(exc), args.json, required=exc.required), EXIT_BUDGET
    except (ConsistencyError, F1zError) as exc:
        return _error("consistency", str(exc), args.json), EXIT_CONSISTENCY
    if args.json:
        result = json.dumps(result, indent=2, ensure_ascii=False)
    return result, code


def _error(kind: str, message: str, as_json: bool, **extra) -> str:
    if as_json:
        return json.dumps({"error": kind, "message": message, **extra}, indent=2)
    return f"error ({kind}): {message}"


def main(argv: list[str] | None = None) -> int:
    text, code = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_CONSISTENCY) else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
