from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from f1z.graph import LooseGraph

DATA = Path(__file__).parent / "data"


def path_graph(n: int) -> LooseGraph:
    vs = [chr(97 + i) for i in range(n)]
    return LooseGraph.build(vs, list(zip(vs, vs[1:])))


def complete_graph(n: int) -> LooseGraph:
    vs = [chr(97 + i) for i in range(n)]
    return LooseGraph.build(vs, list(itertools.combinations(vs, 2)))


def star(k: int = 3) -> LooseGraph:
    leaves = [chr(97 + i) for i in range(k)]
    return LooseGraph.build(["w", *leaves], [("w", x) for x in leaves])


FREE_EDGE = LooseGraph.build(free=1)
EDGE = path_graph(2)
PATH3 = path_graph(3)
PATH4 = path_graph(4)
K3 = complete_graph(3)
K4 = complete_graph(4)
CYCLE4 = LooseGraph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
K4_MINUS = LooseGraph.build("abcd", [e for e in itertools.combinations("abcd", 2) if e != ("c", "d")])


@pytest.fixture
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
