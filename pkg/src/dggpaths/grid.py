"""The odd-even directed grid graph on {1..p} x {1..q}.

Horizontal arcs point right on odd rows and left on even rows; vertical
arcs point up on odd columns and down on even columns.  Coordinates are
1-based everywhere.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple


class Vertex(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x};{self.y})"


class Arc(NamedTuple):
    tail: Vertex
    head: Vertex

    def __str__(self) -> str:
        return f"{self.tail}->{self.head}"


class SquareColor(enum.Enum):
    BLACK = "black"
    WHITE = "white"


def vertex_key(v: Vertex) -> tuple[int, int]:
    """Canonical vertex order: row first, then column."""
    return (v.y, v.x)


def square_color(x: int, y: int) -> SquareColor:
    """Color of the unit square whose bottom-left corner is (x;y)."""
    return SquareColor.BLACK if (x + y) % 2 == 0 else SquareColor.WHITE


def _horizontal_step(y: int) -> int:
    return 1 if y % 2 == 1 else -1


def _vertical_step(x: int) -> int:
    return 1 if x % 2 == 1 else -1


@dataclass(frozen=True)
class Grid:
    """DGG_{p,q}.  Arcs are derived from the direction rule on demand."""

    p: int
    q: int

    def __post_init__(self):
        for name in ("p", "q"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def num_vertices(self) -> int:
        return self.p * self.q

    @property
    def num_arcs(self) -> int:
        return 2 * self.p * self.q - self.p - self.q

    @property
    def num_squares(self) -> int:
        return (self.p - 1) * (self.q - 1)

    def contains(self, v: Vertex) -> bool:
        return 1 <= v.x <= self.p and 1 <= v.y <= self.q

    def check_vertex(self, v) -> Vertex:
        v = Vertex(*v)
        if not self.contains(v):
            raise ValueError(f"vertex {v} outside DGG_{{{self.p},{self.q}}}")
        return v

    def vertices(self) -> Iterator[Vertex]:
        """All vertices in canonical (y, x) order."""
        for y in range(1, self.q + 1):
            for x in range(1, self.p + 1):
                yield Vertex(x, y)

    def out_arcs(self, v) -> list[Arc]:
        """Arcs leaving ``v``: the horizontal one first, then the vertical one."""
        v = self.check_vertex(v)
        result = []
        h = Vertex(v.x + _horizontal_step(v.y), v.y)
        if self.contains(h):
            result.append(Arc(v, h))
        w = Vertex(v.x, v.y + _vertical_step(v.x))
        if self.contains(w):
            result.append(Arc(v, w))
        return result

    def in_arcs(self, v) -> list[Arc]:
        v = self.check_vertex(v)
        result = []
        h = Vertex(v.x - _horizontal_step(v.y), v.y)
        if self.contains(h):
            result.append(Arc(h, v))
        w = Vertex(v.x, v.y - _vertical_step(v.x))
        if self.contains(w):
            result.append(Arc(w, v))
        return result

    def successors(self, v) -> list[Vertex]:
        return [a.head for a in self.out_arcs(v)]

    def predecessors(self, v) -> list[Vertex]:
        return [a.tail for a in self.in_arcs(v)]

    def has_arc(self, tail, head) -> bool:
        tail, head = Vertex(*tail), Vertex(*head)
        if not (self.contains(tail) and self.contains(head)):
            return False
        if tail.y == head.y:
            return head.x - tail.x == _horizontal_step(tail.y)
        if tail.x == head.x:
            return head.y - tail.y == _vertical_step(tail.x)
        return False

    def arcs(self) -> list[Arc]:
        """Materialized arc list, row-major by tail, horizontal before vertical."""
        return list(self._arcs)

    @cached_property
    def _arcs(self) -> tuple[Arc, ...]:
        return tuple(a for v in self.vertices() for a in self.out_arcs(v))

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self._arcs)

    def arc_between(self, u, v) -> Arc:
        """The arc joining two adjacent lattice points, whichever way it points."""
        u, v = Vertex(*u), Vertex(*v)
        if self.has_arc(u, v):
            return Arc(u, v)
        if self.has_arc(v, u):
            return Arc(v, u)
        raise ValueError(f"{u} and {v} are not adjacent in the grid")

    # -- unit squares -----------------------------------------------------

    def contains_square(self, x: int, y: int) -> bool:
        return 1 <= x <= self.p - 1 and 1 <= y <= self.q - 1

    def squares(self) -> Iterator[tuple[int, int]]:
        for y in range(1, self.q):
            for x in range(1, self.p):
                yield (x, y)

    def square_color(self, x: int, y: int) -> SquareColor:
        if not self.contains_square(x, y):
            raise ValueError(f"square ({x},{y}) is off the board")
        return square_color(x, y)

    def square_sides(self, x: int, y: int) -> dict[str, Arc]:
        """The four arcs bounding square (x, y), keyed bottom/top/left/right."""
        if not self.contains_square(x, y):
            raise ValueError(f"square ({x},{y}) is off the board")
        return {
            "bottom": self.arc_between((x, y), (x + 1, y)),
            "top": self.arc_between((x, y + 1), (x + 1, y + 1)),
            "left": self.arc_between((x, y), (x, y + 1)),
            "right": self.arc_between((x + 1, y), (x + 1, y + 1)),
        }

    def boundary_square(self, arc: Arc):
        """The unique square bordering a perimeter arc, or None for interior arcs.

        Returns None as well when the board has no squares at all.
        """
        (x1, y1), (x2, y2) = arc
        if y1 == y2:
            x = min(x1, x2)
            if y1 == 1 and self.q > 1:
                return (x, 1)
            if y1 == self.q and self.q > 1:
                return (x, self.q - 1)
        else:
            y = min(y1, y2)
            if x1 == 1 and self.p > 1:
                return (1, y)
            if x1 == self.p and self.p > 1:
                return (self.p - 1, y)
        return None

    def white_perimeter_arcs(self) -> list[Arc]:
        """Perimeter arcs that border a white square.

        On a board without squares (p == 1 or q == 1) every arc lies on the
        perimeter and belongs to every Hamiltonian path, so all arcs are
        returned.
        """
        if self.num_squares == 0:
            return self.arcs()
        result = []
        for arc in self._arcs:
            sq = self.boundary_square(arc)
            if sq is not None and square_color(*sq) is SquareColor.WHITE:
                result.append(arc)
        return result


def build_grid(p: int, q: int) -> Grid:
    return Grid(p, q)
