import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dggpaths.checks import figure_path  # noqa: E402
from dggpaths.grid import build_grid  # noqa: E402
from dggpaths.tilings import Domino, Orientation, Tiling, WhiteSide  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"

H, V = Orientation.HORIZONTAL, Orientation.VERTICAL
PLUS, MINUS = WhiteSide.INCREASING, WhiteSide.DECREASING


@pytest.fixture
def grid54():
    return build_grid(5, 4)


@pytest.fixture
def fig2a():
    return figure_path("2a")


@pytest.fixture
def fig2b():
    return figure_path("2b")


@pytest.fixture
def fig3a():
    # read off the drawing: three horizontal dominoes on the left, two
    # vertical ones and a horizontal one on the right
    return Tiling(5, 4, frozenset([
        Domino((1, 1), H, PLUS),
        Domino((2, 2), H, MINUS),
        Domino((1, 3), H, PLUS),
        Domino((3, 1), V, PLUS),
        Domino((4, 2), V, MINUS),
        Domino((3, 3), H, PLUS),
    ]))


@pytest.fixture
def fig3b():
    # every row split into two horizontal dominoes
    return Tiling(5, 4, frozenset(
        Domino.from_squares((x, y), (x + 1, y)) for y in (1, 2, 3) for x in (1, 3)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
