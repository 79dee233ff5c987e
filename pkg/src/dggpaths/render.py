"""Deterministic SVG and ASCII pictures of grids, paths and tilings.

Lattice point (x;y) is drawn at ((x-1)*cell + margin, (q-y)*cell + margin),
so row 1 is at the bottom.  The margin is one cell.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .grid import Arc, Grid, SquareColor
from .hamilton import HamPath
from .tilings import Domino, Tiling, axis_arc, canonical_numbering

KINDS = ("grid", "path", "tiling", "path-with-tiling", "chessboard",
         "arc-set-a", "canonical-numbering")

STROKE = 2
NODE_RADIUS = 3
ARC_COLOR = "#000000"
FAINT_COLOR = "#b0b0b0"
SHADE_COLOR = "#c8c8c8"
DOMINO_COLOR = "#1f5fbf"


@dataclass(frozen=True)
class RenderSpec:
    kind: str = "grid"
    cell_size: int = 40
    show_arrows: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown render kind {self.kind!r}")
        if not isinstance(self.cell_size, int) or self.cell_size < 8:
            raise ValueError("cell_size must be an integer >= 8")


def _check_payload(grid: Grid, payload, kind: str):
    """Split the payload into (path, tiling, domino) after type checks."""
    path = tiling = domino = None
    expected = {
        "grid": type(None), "chessboard": type(None), "arc-set-a": type(None),
        "path": HamPath, "tiling": Tiling, "path-with-tiling": tuple,
        "canonical-numbering": Domino,
    }[kind]
    if not isinstance(payload, expected):
        raise TypeError(f"render kind {kind!r} needs a {expected.__name__} payload, "
                        f"got {type(payload).__name__}")
    if kind == "path":
        path = payload
    elif kind == "tiling":
        tiling = payload
    elif kind == "path-with-tiling":
        if len(payload) != 2 or not isinstance(payload[0], HamPath) \
                or not isinstance(payload[1], Tiling):
            raise TypeError("path-with-tiling needs a (HamPath, Tiling) pair")
        path, tiling = payload
    elif kind == "canonical-numbering":
        domino = payload
        if not domino.fits(grid):
            raise ValueError(f"{domino} does not fit on the grid")
    for obj in (path, tiling):
        if obj is not None and (obj.p, obj.q) != (grid.p, grid.q):
            raise ValueError("payload dimensions differ from the grid")
    return path, tiling, domino


def _arcs_for(grid: Grid, kind: str, path, tiling, domino) -> list[Arc]:
    if kind in ("grid", "chessboard"):
        return grid.arcs()
    if kind == "arc-set-a":
        white = set(grid.white_perimeter_arcs())
        return [a for a in grid.arcs() if a not in white]
    if kind in ("path", "path-with-tiling"):
        return path.arcs()
    if kind == "tiling":
        axes = {axis_arc(grid, d) for d in tiling.dominoes}
        return [a for a in grid.arcs() if a not in axes]
    num = canonical_numbering(grid, domino)
    return [Arc(num[j], num[j + 1]) for j in range(5)]


def _num(v: float) -> str:
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def render_svg(grid: Grid, payload=None, spec: RenderSpec = RenderSpec()) -> str:
    path, tiling, domino = _check_payload(grid, payload, spec.kind)
    cs = spec.cell_size
    margin = cs
    width = (grid.p - 1) * cs + 2 * margin
    height = (grid.q - 1) * cs + 2 * margin

    def pos(x, y):
        return ((x - 1) * cs + margin, (grid.q - y) * cs + margin)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>DGG {grid.p}x{grid.q}: {escape(spec.kind)}</title>",
        f'<rect class="background" x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]

    if spec.kind in ("chessboard", "arc-set-a"):
        for x, y in grid.squares():
            if grid.square_color(x, y) is SquareColor.BLACK:
                left, top = pos(x, y + 1)
                out.append(f'<rect class="black-square" x="{left}" y="{top}" '
                           f'width="{cs}" height="{cs}" fill="{SHADE_COLOR}"/>')

    outlines = []
    if tiling is not None:
        outlines = tiling.sorted_dominoes()
    elif domino is not None:
        outlines = [domino]
    for d in outlines:
        (x1, y1), (x2, y2) = d.squares
        left, top = pos(min(x1, x2), max(y1, y2) + 1)
        w = (abs(x1 - x2) + 1) * cs
        h = (abs(y1 - y2) + 1) * cs
        out.append(f'<rect class="domino" x="{left}" y="{top}" width="{w}" height="{h}" '
                   f'fill="none" stroke="{DOMINO_COLOR}" stroke-width="{STROKE + 2}"/>')

    arcs = _arcs_for(grid, spec.kind, path, tiling, domino)
    color = ARC_COLOR
    for a in arcs:
        (x1, y1), (x2, y2) = pos(*a.tail), pos(*a.head)
        out.append(f'<line class="arc" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   f'stroke="{color}" stroke-width="{STROKE}"/>')
        if spec.show_arrows:
            out.append(_arrowhead(x1, y1, x2, y2, cs, color))

    for v in grid.vertices():
        cx, cy = pos(*v)
        out.append(f'<circle class="node" cx="{cx}" cy="{cy}" r="{NODE_RADIUS}" fill="#000000"/>')

    if domino is not None:
        size = max(8, cs // 3)
        for j, v in enumerate(canonical_numbering(grid, domino), start=1):
            cx, cy = pos(*v)
            out.append(f'<text class="label" x="{cx + size // 3}" y="{cy - size // 3}" '
                       f'font-family="sans-serif" font-size="{size}">{j}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _arrowhead(x1, y1, x2, y2, cs, color) -> str:
    mx, my = (x1 + x2) / 2, (y1 + y2) / 2
    dx, dy = (x2 - x1) / cs, (y2 - y1) / cs
    s = cs / 5
    tip = (mx + dx * s / 2, my + dy * s / 2)
    base = (mx - dx * s / 2, my - dy * s / 2)
    px, py = -dy * s / 3, dx * s / 3
    pts = [tip, (base[0] + px, base[1] + py), (base[0] - px, base[1] - py)]
    text = " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
    return f'<polygon class="arrow" points="{text}" fill="{color}"/>'


def render_ascii(grid: Grid, payload=None, spec: RenderSpec = RenderSpec()) -> str:
    """Character picture: nodes 'o', arcs '->' '<-' '^' 'v', black squares '#'."""
    path, tiling, domino = _check_payload(grid, payload, spec.kind)
    rows, cols = 2 * grid.q - 1, 5 * (grid.p - 1) + 1
    canvas = [[" "] * cols for _ in range(rows)]

    def cell(x, y):
        return 2 * (grid.q - y), 5 * (x - 1)

    if spec.kind in ("chessboard", "arc-set-a"):
        for x, y in grid.squares():
            if grid.square_color(x, y) is SquareColor.BLACK:
                r, c = cell(x, y)
                canvas[r - 1][c + 2] = "#"

    for a in _arcs_for(grid, spec.kind, path, tiling, domino):
        (tx, ty), (hx, hy) = a
        r, c = cell(min(tx, hx), min(ty, hy))
        if ty == hy:
            canvas[r][c + 1:c + 5] = list(" -> " if hx > tx else " <- ")
        else:
            canvas[r - 1][c] = "^" if hy > ty else "v"

    for v in grid.vertices():
        r, c = cell(*v)
        canvas[r][c] = "o"
    if domino is not None:
        for j, v in enumerate(canonical_numbering(grid, domino), start=1):
            r, c = cell(*v)
            canvas[r][c] = str(j)

    return "\n".join("".join(row).rstrip() for row in canvas) + "\n"
