"""Hamiltonian paths of DGG_{p,q}: enumeration, counting, prefix counts."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from . import kernels
from .grid import Arc, Grid, Vertex, build_grid

#: Enumeration is refused above this many vertices unless forced.
ENUMERATION_LIMIT = 100

METHODS = ("tilings", "enumerate")


class EnumerationLimitError(ValueError):
    """Raised when exhaustive enumeration is requested on too large a grid."""


@dataclass(frozen=True)
class HamPath:
    p: int
    q: int
    vertices: tuple[Vertex, ...]

    def arcs(self) -> list[Arc]:
        return [Arc(u, v) for u, v in zip(self.vertices, self.vertices[1:])]

    def arc_set(self) -> frozenset[Arc]:
        return self._arc_set

    @cached_property
    def _arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs())

    @property
    def grid(self) -> Grid:
        return Grid(self.p, self.q)

    def prefix_length(self) -> int:
        """Largest r with v_1 = (1;1), ..., v_r = (r;1)."""
        r = 0
        for i, v in enumerate(self.vertices[: self.p]):
            if v != (i + 1, 1):
                break
            r = i + 1
        return r

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q,
                "vertices": [[v.x, v.y] for v in self.vertices]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict, validate: bool = True) -> "HamPath":
        try:
            p, q = int(data["p"]), int(data["q"])
            verts = tuple(Vertex(int(x), int(y)) for x, y in data["vertices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed path object: {exc}") from exc
        path = cls(p, q, verts)
        if validate:
            check_ham_path(Grid(p, q), path)
        return path

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> "HamPath":
        return cls.from_dict(json.loads(text), validate=validate)


def check_ham_path(grid: Grid, path: HamPath) -> None:
    """Raise ValueError unless ``path`` is a Hamiltonian path of ``grid``."""
    if (path.p, path.q) != (grid.p, grid.q):
        raise ValueError(f"path is on DGG_{{{path.p},{path.q}}}, expected "
                         f"DGG_{{{grid.p},{grid.q}}}")
    verts = path.vertices
    if len(verts) != grid.num_vertices or len(set(verts)) != len(verts):
        raise ValueError("path does not visit every vertex exactly once")
    for v in verts:
        grid.check_vertex(v)
    for u, v in zip(verts, verts[1:]):
        if not grid.has_arc(u, v):
            raise ValueError(f"{u}->{v} is not an arc of the grid")


def is_ham_path(grid: Grid, path: HamPath) -> bool:
    try:
        check_ham_path(grid, path)
    except ValueError:
        return False
    return True


def source_vertices(grid: Grid) -> list[Vertex]:
    """Vertices with no incoming arc."""
    return [v for v in grid.vertices() if not grid.in_arcs(v)]


def enumerate_ham_paths(grid: Grid, force: bool = False) -> Iterator[HamPath]:
    """Yield every Hamiltonian path once, in lexicographic (y, x) order.

    Depth-first search rooted at (1;1).  A branch is cut as soon as some
    unvisited vertex has no in-neighbour left that is unvisited or is the
    current end of the partial path.
    """
    if grid.num_vertices > ENUMERATION_LIMIT and not force:
        raise EnumerationLimitError(
            f"refusing to enumerate DGG_{{{grid.p},{grid.q}}} "
            f"({grid.num_vertices} > {ENUMERATION_LIMIT} vertices) without force")
    p, q = grid.p, grid.q
    n = p * q
    verts = list(grid.vertices())
    index = {v: i for i, v in enumerate(verts)}
    out = [sorted((index[w] for w in grid.successors(v))) for v in verts]
    avail = [len(grid.in_arcs(v)) for v in verts]
    visited = [False] * n

    visited[0] = True
    path = [0]
    # stack of iterators over candidate successors of each path vertex
    stack = [iter(out[0])]
    if n == 1:
        yield HamPath(p, q, (verts[0],))
        return
    while stack:
        u = path[-1]
        advanced = False
        for v in stack[-1]:
            if visited[v]:
                continue
            nbrs = out[u]
            dead = False
            for w in nbrs:
                avail[w] -= 1
                if w != v and not visited[w] and avail[w] == 0:
                    dead = True
            if dead:
                for w in nbrs:
                    avail[w] += 1
                continue
            visited[v] = True
            path.append(v)
            if len(path) == n:
                yield HamPath(p, q, tuple(verts[i] for i in path))
                visited[v] = False
                path.pop()
                for w in nbrs:
                    avail[w] += 1
                continue
            stack.append(iter(out[v]))
            advanced = True
            break
        if advanced:
            continue
        # exhausted this level: retreat one step
        stack.pop()
        path.pop()
        if path:
            visited[u] = False
            for w in out[path[-1]]:
                avail[w] += 1


def count_ham_paths(p: int, q: int, method: str = "tilings",
                    force: bool = False) -> int:
    """h(p, q) by the tiling DP (default) or by exhaustive search."""
    grid = build_grid(p, q)
    if method == "tilings":
        from .tilings import count_tilings_exact
        return count_tilings_exact(p, q)
    if method == "enumerate":
        if grid.num_vertices > ENUMERATION_LIMIT and not force:
            raise EnumerationLimitError(
                f"refusing to enumerate DGG_{{{p},{q}}} without force")
        return sum(kernels.prefix_histogram(p, q))
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def prefix_counts(p: int, q: int, force: bool = False) -> list[int]:
    """[h_0, h_1, ..., h_p] for DGG_{p,q}, by exhaustive search."""
    grid = build_grid(p, q)
    if grid.num_vertices > ENUMERATION_LIMIT and not force:
        raise EnumerationLimitError(
            f"refusing to enumerate DGG_{{{p},{q}}} without force")
    return kernels.prefix_histogram(p, q)


def count_prefix(p: int, q: int, r: int, force: bool = False) -> int:
    """h_r(p, q): paths that start along exactly the first r bottom-row vertices."""
    if not 1 <= r <= p:
        raise ValueError(f"r must lie in 1..{p}, got {r}")
    return prefix_counts(p, q, force=force)[r]


def predicted_endpoints(p: int, q: int) -> tuple[Vertex, Vertex | None]:
    build_grid(p, q)
    start = Vertex(1, 1)
    if p % 2 and q % 2:
        return start, Vertex(p, q)
    if p % 2:
        return start, Vertex(1, q)
    if q % 2:
        return start, Vertex(p, 1)
    return start, None


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b
