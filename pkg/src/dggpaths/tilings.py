"""Dominoes on the (p-1) x (q-1) board of unit squares, and their tilings."""
from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass
from typing import Iterator

from .grid import Arc, Grid, SquareColor, Vertex, build_grid, square_color


class Orientation(enum.Enum):
    HORIZONTAL = "H"
    VERTICAL = "V"


class WhiteSide(enum.Enum):
    INCREASING = "+"
    DECREASING = "-"


@dataclass(frozen=True)
class Domino:
    black: tuple[int, int]
    orientation: Orientation
    white_side: WhiteSide

    def __post_init__(self):
        object.__setattr__(self, "black", tuple(self.black))
        if square_color(*self.black) is not SquareColor.BLACK:
            raise ValueError(f"square {self.black} is not black")

    @property
    def white(self) -> tuple[int, int]:
        x, y = self.black
        step = 1 if self.white_side is WhiteSide.INCREASING else -1
        if self.orientation is Orientation.HORIZONTAL:
            return (x + step, y)
        return (x, y + step)

    @property
    def squares(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.black, self.white)

    def fits(self, grid: Grid) -> bool:
        return all(grid.contains_square(*s) for s in self.squares)

    def perimeter(self) -> list[Vertex]:
        """The six perimeter vertices in counter-clockwise order."""
        (x1, y1), (x2, y2) = sorted(self.squares)
        if y1 == y2:  # horizontal: squares (x1,y) and (x1+1,y)
            x, y = x1, y1
            pts = [(x, y), (x + 1, y), (x + 2, y), (x + 2, y + 1), (x + 1, y + 1), (x, y + 1)]
        else:
            x, y = x1, y1
            pts = [(x, y), (x + 1, y), (x + 1, y + 1), (x + 1, y + 2), (x, y + 2), (x, y + 1)]
        return [Vertex(*pt) for pt in pts]

    def to_dict(self) -> dict:
        return {"black": list(self.black), "orientation": self.orientation.value,
                "white_side": self.white_side.value}

    @classmethod
    def from_dict(cls, data: dict) -> "Domino":
        return cls(tuple(int(c) for c in data["black"]),
                   Orientation(data["orientation"]), WhiteSide(data["white_side"]))

    @classmethod
    def from_squares(cls, a, b) -> "Domino":
        """The domino covering two edge-adjacent squares, in either order."""
        a, b = tuple(a), tuple(b)
        if square_color(*a) is not SquareColor.BLACK:
            a, b = b, a
        dx, dy = b[0] - a[0], b[1] - a[1]
        if abs(dx) + abs(dy) != 1:
            raise ValueError(f"squares {a} and {b} are not edge-adjacent")
        orientation = Orientation.HORIZONTAL if dy == 0 else Orientation.VERTICAL
        side = WhiteSide.INCREASING if dx + dy > 0 else WhiteSide.DECREASING
        return cls(a, orientation, side)


@functools.lru_cache(maxsize=1 << 16)
def canonical_numbering(grid: Grid, domino: Domino) -> tuple[Vertex, ...]:
    """The unique labelling D_1..D_6 of the perimeter with every D_j -> D_j+1 an arc.

    All twelve walks around the perimeter (6 starts x 2 directions) are
    tested; exactly one must pass.
    """
    if not domino.fits(grid):
        raise ValueError(f"{domino} does not fit on DGG_{{{grid.p},{grid.q}}}")
    ring = domino.perimeter()
    found = []
    for walk in (ring, ring[::-1]):
        for s in range(6):
            cand = walk[s:] + walk[:s]
            if all(grid.has_arc(cand[j], cand[j + 1]) for j in range(5)):
                found.append(tuple(cand))
    if len(found) != 1:
        raise AssertionError(
            f"{domino}: expected one canonical numbering, found {len(found)}")
    return found[0]


def axis_arc(grid: Grid, domino: Domino) -> Arc:
    """D_5 -> D_2, the arc along the domino's shorter symmetry axis."""
    d = canonical_numbering(grid, domino)
    return Arc(d[4], d[1])


def black_end_arc(grid: Grid, domino: Domino) -> Arc:
    """D_1 -> D_6, the far side of the black square."""
    d = canonical_numbering(grid, domino)
    return Arc(d[0], d[5])


@dataclass(frozen=True)
class Tiling:
    p: int
    q: int
    dominoes: frozenset[Domino]

    def __post_init__(self):
        object.__setattr__(self, "dominoes", frozenset(self.dominoes))

    @property
    def grid(self) -> Grid:
        return Grid(self.p, self.q)

    def sorted_dominoes(self) -> list[Domino]:
        return sorted(self.dominoes, key=lambda d: (d.black[1], d.black[0]))

    def by_black(self) -> dict[tuple[int, int], Domino]:
        return {d.black: d for d in self.dominoes}

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q,
                "dominoes": [d.to_dict() for d in self.sorted_dominoes()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict, validate: bool = True) -> "Tiling":
        try:
            p, q = int(data["p"]), int(data["q"])
            dominoes = [Domino.from_dict(d) for d in data["dominoes"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed tiling object: {exc}") from exc
        tiling = cls(p, q, frozenset(dominoes))
        if len(tiling.dominoes) != len(dominoes):
            raise ValueError("duplicate domino in tiling")
        if validate:
            check_tiling(Grid(p, q), tiling)
        return tiling

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> "Tiling":
        return cls.from_dict(json.loads(text), validate=validate)


def check_tiling(grid: Grid, tiling: Tiling) -> None:
    """Raise ValueError unless ``tiling`` covers the board exactly once."""
    if (tiling.p, tiling.q) != (grid.p, grid.q):
        raise ValueError("tiling and grid dimensions differ")
    covered = set()
    for d in tiling.dominoes:
        if not d.fits(grid):
            raise ValueError(f"{d} sticks out of the board")
        for s in d.squares:
            if s in covered:
                raise ValueError(f"square {s} covered twice")
            covered.add(s)
    if len(covered) != grid.num_squares:
        raise ValueError("tiling leaves squares uncovered")


def enumerate_tilings(p: int, q: int) -> Iterator[Tiling]:
    """Every domino tiling once, by backtracking.

    The lowest, then leftmost, uncovered square is filled next, horizontal
    placement before vertical.
    """
    build_grid(p, q)
    w, h = p - 1, q - 1
    if (w * h) % 2:
        return
    covered = [[False] * (w + 2) for _ in range(h + 2)]
    placed: list[Domino] = []
    cells = [(x, y) for y in range(1, h + 1) for x in range(1, w + 1)]

    def fill(start):
        i = start
        while i < len(cells) and covered[cells[i][1]][cells[i][0]]:
            i += 1
        if i == len(cells):
            yield Tiling(p, q, frozenset(placed))
            return
        x, y = cells[i]
        for nx, ny in ((x + 1, y), (x, y + 1)):
            if nx <= w and ny <= h and not covered[ny][nx]:
                covered[y][x] = covered[ny][nx] = True
                placed.append(Domino.from_squares((x, y), (nx, ny)))
                yield from fill(i + 1)
                placed.pop()
                covered[y][x] = covered[ny][nx] = False

    yield from fill(0)


def count_tilings_exact(p: int, q: int) -> int:
    """Number of domino tilings of the (p-1) x (q-1) board.

    Sweeps the longer side one line at a time; the state is the set of
    cells in the next line already covered by dominoes sticking out of the
    current one.
    """
    build_grid(p, q)
    rows, cols = sorted((p - 1, q - 1))
    if rows * cols % 2:
        return 0
    if rows == 0:
        return 1
    full = (1 << rows) - 1

    def fills(mask, i, nxt):
        # complete one line given its pre-covered cells, yield the next mask
        if i == rows:
            yield nxt
            return
        if mask >> i & 1:
            yield from fills(mask, i + 1, nxt)
            return
        yield from fills(mask, i + 1, nxt | 1 << i)  # domino across lines
        if i + 1 < rows and not mask >> (i + 1) & 1:
            yield from fills(mask, i + 2, nxt)  # domino within the line

    transitions = {}
    counts = {0: 1}
    for _ in range(cols):
        new: dict[int, int] = {}
        for mask, c in counts.items():
            if mask not in transitions:
                transitions[mask] = list(fills(mask, 0, 0))
            for nxt in transitions[mask]:
                new[nxt] = new.get(nxt, 0) + c
        counts = new
    assert all(m <= full for m in counts)
    return counts.get(0, 0)


def avoids(path, domino: Domino) -> bool:
    """True iff the path does not use the domino's axis arc."""
    grid = path.grid
    if not domino.fits(grid):
        raise ValueError(f"{domino} does not fit on DGG_{{{grid.p},{grid.q}}}")
    return axis_arc(grid, domino) not in path.arc_set()
