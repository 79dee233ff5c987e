import pytest
from hypothesis import given, strategies as st

from dggpaths.grid import Arc, SquareColor, Vertex, build_grid, square_color
from oracles import arc_set

dims = st.integers(min_value=1, max_value=12)


def test_figure1_grid_sizes():
    g = build_grid(5, 4)
    assert len(list(g.vertices())) == 20
    assert len(g.arcs()) == 31 == 2 * 20 - 5 - 4


def test_single_vertex():
    g = build_grid(1, 1)
    assert list(g.vertices()) == [Vertex(1, 1)]
    assert g.arcs() == []
    assert g.out_arcs((1, 1)) == []


def test_three_by_three():
    g = build_grid(3, 3)
    assert len(g.arcs()) == 12
    assert g.out_arcs((1, 1)) == [Arc((1, 1), (2, 1)), Arc((1, 1), (1, 2))]


def test_out_arcs_dgg54():
    g = build_grid(5, 4)
    assert g.out_arcs((2, 1)) == [Arc((2, 1), (3, 1))]
    assert g.out_arcs((1, 1)) == [Arc((1, 1), (2, 1)), Arc((1, 1), (1, 2))]
    # top-right corner of Figure 1: row 4 points left, column 5 points up
    assert g.out_arcs((5, 4)) == [Arc((5, 4), (4, 4))]


@pytest.mark.parametrize("p,q", [(0, 3), (3, 0), (-1, 2)])
def test_rejects_bad_dimensions(p, q):
    with pytest.raises(ValueError):
        build_grid(p, q)


def test_out_of_range_vertex():
    with pytest.raises(ValueError):
        build_grid(3, 3).out_arcs((4, 1))


@pytest.mark.parametrize("sq,color", [((1, 1), SquareColor.BLACK),
                                      ((2, 1), SquareColor.WHITE),
                                      ((3, 2), SquareColor.WHITE)])
def test_square_color(sq, color):
    assert square_color(*sq) is color
    assert build_grid(5, 4).square_color(*sq) is color


def test_square_color_off_board():
    with pytest.raises(ValueError):
        build_grid(5, 4).square_color(5, 1)


def test_canonical_arc_order():
    arcs = build_grid(4, 3).arcs()
    keys = [(a.tail.y, a.tail.x) for a in arcs]
    assert keys == sorted(keys)


@given(dims, dims)
def test_arc_set_matches_rule(p, q):
    g = build_grid(p, q)
    assert {(tuple(a.tail), tuple(a.head)) for a in g.arcs()} == arc_set(p, q)
    assert len(g.arcs()) == 2 * p * q - p - q


@given(dims, dims)
def test_degrees_and_antisymmetry(p, q):
    g = build_grid(p, q)
    arcs = g.arc_set
    for v in g.vertices():
        assert len(g.out_arcs(v)) <= 2 and len(g.in_arcs(v)) <= 2
    for a in arcs:
        assert Arc(a.head, a.tail) not in arcs
        assert abs(a.tail.x - a.head.x) + abs(a.tail.y - a.head.y) == 1
        assert g.has_arc(a.tail, a.head)


@given(dims, dims)
def test_square_counts(p, q):
    g = build_grid(p, q)
    colors = [g.square_color(*s) for s in g.squares()]
    black = sum(c is SquareColor.BLACK for c in colors)
    assert black == sum((x + y) % 2 == 0 for x, y in g.squares())
    assert len(colors) == (p - 1) * (q - 1)


@given(dims, dims)
def test_transpose_is_isomorphism(p, q):
    a = {(t[::-1], h[::-1]) for t, h in (map(tuple, arc) for arc in build_grid(p, q).arcs())}
    b = {(tuple(t), tuple(h)) for t, h in build_grid(q, p).arcs()}
    assert a == b


def test_white_perimeter_fig6():
    # Figure 6 drops exactly these arcs from DGG_{5,4}
    g = build_grid(5, 4)
    wp = set(g.white_perimeter_arcs())
    assert len(wp) == 5 + 4 - 2
    assert Arc((2, 1), (3, 1)) in wp and Arc((1, 1), (2, 1)) not in wp
