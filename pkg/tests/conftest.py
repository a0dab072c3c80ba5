from pathlib import Path

import pytest

from br_automata import Palette, PayoffMatrix, RegularGraph, induced_rule, random_config, run
from br_automata.plot import render_pgm

GOLDEN = Path(__file__).parent / "golden"

HAWK_DOVE = PayoffMatrix.of([[1, 0], [4, -2]])
FOREST = PayoffMatrix.of([[3, 94, 46], [33, 85, 66], [52, 2, 67]])


# name -> (matrix, cycle length, seed, steps)
FIGURES = {
    "hawk_dove_c30": (HAWK_DOVE, 30, 1, 40),
    "forest_c60": (FOREST, 60, 2, 40),
}


def figure_pgm(name: str) -> bytes:
    M, n, seed, steps = FIGURES[name]
    F = induced_rule(M, 2)
    T = run(RegularGraph.circle(n), F, random_config(n, M.k, seed), steps, stop_at_cycle=False)
    return render_pgm(T, Palette.default(M.k))


@pytest.fixture
def hawk_dove():
    return HAWK_DOVE


@pytest.fixture
def forest():
    return FOREST


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, text = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {text}")
