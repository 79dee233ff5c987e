"""Tilings <-> Hamiltonian paths.

A tiling is turned into a path by deleting, for every domino, its axis arc
and its black-end arc; what is left must be a single Hamiltonian path.  A
path is turned back into a tiling by reading off, for every black square,
which pair of opposite sides the path uses, building the bipartite
black/white square graph those choices allow, and peeling leaves to get
its unique perfect matching.

Both directions re-check their own output and raise
:class:`ConsistencyError` when something that must hold does not.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass

from .grid import Arc, Grid, SquareColor, Vertex
from .hamilton import HamPath, check_ham_path
from .tilings import (Domino, Tiling, avoids, canonical_numbering,
                      check_tiling)


class ConsistencyError(AssertionError):
    """A correspondence invariant failed on a concrete instance."""


@dataclass(frozen=True)
class ArcClassification:
    white_perimeter: frozenset[Arc]
    domino_axis: frozenset[Arc]
    domino_black_end: frozenset[Arc]
    domino_black_side: frozenset[Arc]

    def parts(self):
        return (self.white_perimeter, self.domino_axis,
                self.domino_black_end, self.domino_black_side)


@dataclass(frozen=True)
class BlackSquareGraph:
    """Bipartite graph between black and white squares allowed by a path."""

    black_nodes: tuple[tuple[int, int], ...]
    white_nodes: tuple[tuple[int, int], ...]
    edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def has_cycle(self) -> bool:
        parent = {s: s for s in self.black_nodes + self.white_nodes}

        def find(s):
            while parent[s] != s:
                parent[s] = parent[parent[s]]
                s = parent[s]
            return s

        for b, w in self.edges:
            rb, rw = find(b), find(w)
            if rb == rw:
                return True
            parent[rb] = rw
        return False


def classify_arcs(grid: Grid, tiling: Tiling) -> ArcClassification:
    try:
        check_tiling(grid, tiling)
    except ValueError as exc:
        raise ValueError(f"invalid tiling: {exc}") from exc
    white_perimeter = frozenset(grid.white_perimeter_arcs())
    axis, black_end = set(), set()
    for d in tiling.dominoes:
        num = canonical_numbering(grid, d)
        axis.add(Arc(num[4], num[1]))
        black_end.add(Arc(num[0], num[5]))
    rest = grid.arc_set - white_perimeter - axis - black_end
    return ArcClassification(white_perimeter, frozenset(axis),
                             frozenset(black_end), frozenset(rest))


def _chain(grid: Grid, arcs) -> list[Vertex]:
    """Order an arc set as one path through every vertex, or raise."""
    succ: dict[Vertex, Vertex] = {}
    has_pred = set()
    for a in arcs:
        if a.tail in succ or a.head in has_pred:
            raise ConsistencyError(f"arc set branches at {a}")
        succ[a.tail] = a.head
        has_pred.add(a.head)
    start = Vertex(1, 1)
    if start in has_pred:
        raise ConsistencyError("(1;1) has an incoming arc")
    order = [start]
    while order[-1] in succ and len(order) <= grid.num_vertices:
        order.append(succ[order[-1]])
    if len(order) != grid.num_vertices or len(set(order)) != len(order):
        raise ConsistencyError(
            f"remaining arcs do not form a Hamiltonian path "
            f"({len(order)} of {grid.num_vertices} vertices reached)")
    return order


def tiling_to_path(grid: Grid, tiling: Tiling) -> HamPath:
    """The unique Hamiltonian path avoiding every domino of ``tiling``."""
    cls = classify_arcs(grid, tiling)
    kept = grid.arc_set - cls.domino_axis - cls.domino_black_end
    if len(kept) != grid.num_vertices - 1:
        raise ConsistencyError(
            f"{len(kept)} arcs remain, a Hamiltonian path needs {grid.num_vertices - 1}")
    path = HamPath(grid.p, grid.q, tuple(_chain(grid, kept)))
    used = path.arc_set()
    if not cls.white_perimeter <= used:
        raise ConsistencyError("path misses a white perimeter arc")
    for d in tiling.dominoes:
        num = canonical_numbering(grid, d)
        if Arc(num[0], num[1]) not in used or Arc(num[4], num[5]) not in used:
            raise ConsistencyError(f"path misses D1->D2 or D5->D6 of {d}")
    return path


def black_square_choices(grid: Grid, path: HamPath) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Admissible white partners for every black square under ``path``.

    The path must use exactly two opposite sides of each black square.
    Vertical sides in use force a vertical domino, horizontal ones a
    horizontal domino.
    """
    used = path.arc_set()
    choices = {}
    for sq in grid.squares():
        if grid.square_color(*sq) is not SquareColor.BLACK:
            continue
        sides = {name for name, arc in grid.square_sides(*sq).items() if arc in used}
        x, y = sq
        if sides == {"left", "right"}:
            cand = [(x, y - 1), (x, y + 1)]
        elif sides == {"bottom", "top"}:
            cand = [(x - 1, y), (x + 1, y)]
        else:
            raise ConsistencyError(
                f"path uses sides {sorted(sides)} of black square {sq}; "
                "expected exactly two opposite ones")
        choices[sq] = [c for c in cand if grid.contains_square(*c)]
    return choices


def black_square_graph(grid: Grid, path: HamPath) -> BlackSquareGraph:
    choices = black_square_choices(grid, path)
    blacks = tuple(sorted(choices, key=lambda s: (s[1], s[0])))
    whites = tuple(s for s in sorted(grid.squares(), key=lambda s: (s[1], s[0]))
                   if grid.square_color(*s) is SquareColor.WHITE)
    edges = tuple((b, w) for b in blacks for w in choices[b])
    return BlackSquareGraph(blacks, whites, edges)


def unique_perfect_matching(graph: BlackSquareGraph) -> dict[tuple[int, int], tuple[int, int]]:
    """Perfect matching of a forest by repeatedly matching a leaf to its neighbour.

    Returns black -> white.  Raises ConsistencyError if some node ends up
    isolated or the peeling stalls.
    """
    adj: dict = defaultdict(set)
    nodes = set(graph.black_nodes) | set(graph.white_nodes)
    blacks = set(graph.black_nodes)
    for b, w in graph.edges:
        adj[b].add(w)
        adj[w].add(b)
    order = sorted(nodes, key=lambda s: (s[1], s[0]))
    for s in order:
        if not adj[s]:
            raise ConsistencyError(f"square {s} cannot be matched")
    leaves = deque(s for s in order if len(adj[s]) == 1)
    matching = {}
    remaining = set(nodes)
    while leaves:
        leaf = leaves.popleft()
        if leaf not in remaining:
            continue
        if not adj[leaf]:
            raise ConsistencyError(f"square {leaf} cannot be matched")
        (mate,) = adj[leaf]
        b, w = (leaf, mate) if leaf in blacks else (mate, leaf)
        matching[b] = w
        remaining.discard(leaf)
        remaining.discard(mate)
        adj[leaf].clear()
        for t in adj.pop(mate):
            if t != leaf:
                adj[t].discard(mate)
                if not adj[t]:
                    raise ConsistencyError(f"square {t} cannot be matched")
                if len(adj[t]) == 1:
                    leaves.append(t)
    if remaining:
        raise ConsistencyError("leaf peeling stalled: graph has a cycle")
    return matching


def path_to_tiling(grid: Grid, path: HamPath) -> Tiling:
    """The unique tiling all of whose dominoes ``path`` avoids."""
    try:
        check_ham_path(grid, path)
    except ValueError as exc:
        raise ValueError(f"not a Hamiltonian path: {exc}") from exc
    matching = unique_perfect_matching(black_square_graph(grid, path))
    tiling = Tiling(grid.p, grid.q,
                    frozenset(Domino.from_squares(b, w) for b, w in matching.items()))
    back = tiling_to_path(grid, tiling)
    if back != path:
        raise ConsistencyError("tiling recovered from path does not map back to it")
    return tiling


def verify_avoidance(grid: Grid, path: HamPath, tiling: Tiling) -> bool:
    """True iff ``path`` avoids every domino of ``tiling``."""
    if (path.p, path.q) != (grid.p, grid.q) or (tiling.p, tiling.q) != (grid.p, grid.q):
        raise ValueError("path, tiling and grid dimensions differ")
    return all(avoids(path, d) for d in tiling.dominoes)
