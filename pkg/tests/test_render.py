import xml.etree.ElementTree as ET

import pytest

from conftest import GOLDEN
from dggpaths.checks import golden_renderings
from dggpaths.grid import build_grid
from dggpaths.hamilton import enumerate_ham_paths
from dggpaths.render import KINDS, RenderSpec, render_ascii, render_svg
from dggpaths.tilings import Domino, Orientation, WhiteSide, enumerate_tilings

def classes(svg):
    root = ET.fromstring(svg)
    out = {}
    for el in root.iter():
        c = el.get("class")
        if c:
            out.setdefault(c, []).append(el)
    return out


@pytest.fixture(scope="module")
def rendered():
    return golden_renderings()


@pytest.mark.parametrize("name", sorted(p.name for p in GOLDEN.iterdir()))
def test_golden(rendered, name):
    assert rendered[name] == (GOLDEN / name).read_text()


def test_golden_set_complete(rendered):
    assert set(rendered) == {p.name for p in GOLDEN.iterdir()}


def test_repeatable():
    assert golden_renderings() == golden_renderings()


def test_figure1_topology(grid54):
    c = classes(render_svg(grid54))
    assert len(c["node"]) == 20
    assert len(c["arc"]) == len(c["arrow"]) == 31


def test_figure2a_path(grid54, fig2a):
    c = classes(render_svg(grid54, fig2a, RenderSpec("path")))
    assert len(c["arc"]) == 19
    last = c["arc"][-1]
    # (1;4) sits at the top-left of the drawing
    assert (last.get("x2"), last.get("y2")) == ("40", "40")


def test_no_arrows(grid54):
    c = classes(render_svg(grid54, None, RenderSpec("grid", show_arrows=False)))
    assert "arrow" not in c and len(c["arc"]) == 31


@pytest.mark.parametrize("p,q", [(5, 5), (7, 3), (3, 7)])
def test_tiling_counts(p, q):
    g = build_grid(p, q)
    t = next(enumerate_tilings(p, q))
    c = classes(render_svg(g, t, RenderSpec("tiling")))
    assert len(c["domino"]) == (p - 1) * (q - 1) // 2
    # everything except the axis arcs
    assert len(c["arc"]) == 2 * p * q - p - q - len(c["domino"])


def test_path_with_tiling_counts(grid54, fig2a, fig3a):
    c = classes(render_svg(grid54, (fig2a, fig3a), RenderSpec("path-with-tiling")))
    assert len(c["arc"]) == 5 * 4 - 1
    assert len(c["domino"]) == 6


def test_chessboard(grid54):
    c = classes(render_svg(grid54, None, RenderSpec("chessboard")))
    assert len(c["black-square"]) == 6


def test_arc_set_a(grid54):
    c = classes(render_svg(grid54, None, RenderSpec("arc-set-a")))
    assert len(c["arc"]) == 2 * 4 * 3


def test_canonical_numbering_labels(grid54):
    d = Domino((3, 1), Orientation.VERTICAL, WhiteSide.INCREASING)
    c = classes(render_svg(grid54, d, RenderSpec("canonical-numbering")))
    assert sorted(el.text for el in c["label"]) == list("123456")


def test_single_vertex():
    c = classes(render_svg(build_grid(1, 1)))
    assert len(c["node"]) == 1 and "arc" not in c
    assert render_ascii(build_grid(1, 1)) == "o\n"


def test_ascii_column():
    assert render_ascii(build_grid(1, 3)).splitlines() == ["o", "^", "o", "^", "o"]


def test_ascii_boustrophedon():
    g = build_grid(2, 3)
    (h,) = enumerate_ham_paths(g)
    assert render_ascii(g, h, RenderSpec("path")) == "o -> o\n^    v\no    o\n^    v\no    o\n"


def test_dgg33_paths_differ():
    g = build_grid(3, 3)
    a, b = (render_svg(g, h, RenderSpec("path")) for h in enumerate_ham_paths(g))
    assert a != b


def test_cell_size_scales(grid54):
    root = ET.fromstring(render_svg(grid54, None, RenderSpec(cell_size=20)))
    assert root.get("width") == "120"


@pytest.mark.parametrize("kwargs", [{"kind": "nope"}, {"cell_size": 4}, {"cell_size": 10.5}])
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        RenderSpec(**kwargs)


def test_payload_type_checked(grid54, fig2a):
    with pytest.raises(TypeError):
        render_svg(grid54, fig2a, RenderSpec("tiling"))
    with pytest.raises(ValueError):
        render_svg(build_grid(4, 5), fig2a, RenderSpec("path"))


def test_every_kind_is_known():
    assert set(KINDS) == {"grid", "path", "tiling", "path-with-tiling", "chessboard",
                          "arc-set-a", "canonical-numbering"}
