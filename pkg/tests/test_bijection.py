import itertools

import pytest

from dggpaths.bijection import (ConsistencyError, black_square_choices,
                                black_square_graph, classify_arcs,
                                path_to_tiling, tiling_to_path,
                                verify_avoidance)
from dggpaths.grid import build_grid
from dggpaths.hamilton import HamPath, enumerate_ham_paths
from dggpaths.tilings import Tiling, enumerate_tilings

GRIDS = [(p, q) for p in range(1, 7) for q in range(1, 7)]


def test_figure_correspondence(grid54, fig2a, fig2b, fig3a, fig3b):
    assert tiling_to_path(grid54, fig3a) == fig2a
    assert tiling_to_path(grid54, fig3b) == fig2b
    assert path_to_tiling(grid54, fig2a) == fig3a
    assert path_to_tiling(grid54, fig2b) == fig3b


def test_avoidance_pairs(grid54, fig2a, fig3a, fig3b):
    assert verify_avoidance(grid54, fig2a, fig3a)
    assert not verify_avoidance(grid54, fig2a, fig3b)


def test_unique_small_cases():
    g = build_grid(2, 3)
    (t,) = enumerate_tilings(2, 3)
    (h,) = enumerate_ham_paths(g)
    assert tiling_to_path(g, t) == h
    assert h.vertices == ((1, 1), (1, 2), (1, 3), (2, 3), (2, 2), (2, 1))


def test_thin_grid():
    g = build_grid(1, 4)
    empty = Tiling(1, 4, frozenset())
    path = tiling_to_path(g, empty)
    assert path.vertices == ((1, 1), (1, 2), (1, 3), (1, 4))
    assert verify_avoidance(g, path, empty)
    assert path_to_tiling(g, path) == empty


def test_roundtrip_5x5():
    g = build_grid(5, 5)
    tilings = list(enumerate_tilings(5, 5))
    assert len(tilings) == 36
    paths = {tiling_to_path(g, t) for t in tilings}
    assert len(paths) == 36
    for t in tilings:
        assert path_to_tiling(g, tiling_to_path(g, t)) == t


@pytest.mark.parametrize("p,q", GRIDS)
def test_bh_structure(p, q):
    g = build_grid(p, q)
    for h in enumerate_ham_paths(g):
        choices = black_square_choices(g, h)
        if (1, 1) in choices:
            # bottom-left black square has a single possible partner
            assert len(choices[(1, 1)]) == 1
        bh = black_square_graph(g, h)
        assert not bh.has_cycle()


@pytest.mark.parametrize("p,q", [(5, 4), (5, 5), (6, 5)])
def test_two_opposite_sides(p, q):
    g = build_grid(p, q)
    for h in enumerate_ham_paths(g):
        used = h.arc_set()
        for x, y in g.squares():
            if (x + y) % 2:
                continue
            sides = g.square_sides(x, y)
            on = {name for name, arc in sides.items() if arc in used}
            assert on in ({"left", "right"}, {"bottom", "top"})


@pytest.mark.parametrize("p,q", [(4, 5), (5, 5)])
def test_mismatched_pairs_fail(p, q):
    g = build_grid(p, q)
    tilings = list(enumerate_tilings(p, q))
    paths = [tiling_to_path(g, t) for t in tilings]
    for (i, h), (j, t) in itertools.product(enumerate(paths), enumerate(tilings)):
        assert verify_avoidance(g, h, t) == (i == j)


def test_arc_classification_figure3a(grid54, fig3a):
    c = classify_arcs(grid54, fig3a)
    assert len(c.white_perimeter) == 7
    assert len(c.domino_axis) == len(c.domino_black_end) == 6
    assert sum(len(s) for s in c.parts()) == 31
    assert frozenset().union(*c.parts()) == frozenset(grid54.arcs())


def test_arc_set_a_size():
    g = build_grid(4, 3)
    assert len(g.white_perimeter_arcs()) == 5
    assert len(g.arcs()) - 5 == 12


def test_classification_single_column():
    g = build_grid(1, 5)
    c = classify_arcs(g, Tiling(1, 5, frozenset()))
    assert not (c.domino_axis or c.domino_black_end or c.domino_black_side)


def test_rejects_non_path():
    g = build_grid(3, 3)
    # (3,3) -> (2,3) runs against the row direction
    bogus = HamPath(3, 3, ((1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (2, 3), (2, 2), (1, 2),
                           (1, 3)))
    with pytest.raises(ValueError):
        path_to_tiling(g, bogus)


def test_consistency_error_is_assertion():
    assert issubclass(ConsistencyError, AssertionError)
