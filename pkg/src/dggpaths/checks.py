"""Mechanical reproduction of the published tables and identities.

Each check returns a :class:`CheckResult`; ``run_checks`` drives them for
the ``verify`` command and for the acceptance tests.  Detail strings never
contain timings so that repeated runs print identical text.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import closed_forms, hamilton, tilings
from .bijection import (classify_arcs, path_to_tiling, tiling_to_path,
                        verify_avoidance)
from .grid import Vertex, build_grid

# h(p, q) as printed for min(p, q) <= 6; the blank cells are left out.
# Keyed (p, q); rows of the printed table run over q, columns over p.
SMALL_TABLE = {
    **{(p, 1): 1 for p in range(1, 7)},
    (1, 2): 1, (2, 2): 0, (3, 2): 1, (4, 2): 0, (5, 2): 1, (6, 2): 0,
    (1, 3): 1, (2, 3): 1, (3, 3): 2, (4, 3): 3, (5, 3): 5, (6, 3): 8,
    (1, 4): 1, (2, 4): 0, (3, 4): 3, (4, 4): 0, (6, 4): 0,
    (1, 5): 1, (2, 5): 1, (3, 5): 5,
    (1, 6): 1, (2, 6): 0, (3, 6): 8, (4, 6): 0, (6, 6): 0,
}

_LARGE_ROWS = {
    4: [0, 11, 0, 41, 0, 153],
    5: [11, 36, 95, 281, 781, 2245],
    6: [0, 95, 0, 1183, 0, 14824],
    7: [41, 281, 1183, 6728, 31529, 167089],
    8: [0, 781, 0, 31529, 0, 1292697],
    9: [153, 2245, 14824, 167089, 1292697, 12988816],
}
# h(p, q) for 4 <= p, q <= 9, keyed (p, q)
LARGE_TABLE = {(p, q): row[p - 4] for q, row in _LARGE_ROWS.items() for p in range(4, 10)}

F17 = 1597


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    budget: float | None = None

    def line(self, timing: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.detail}"
        if timing:
            text += f" [{self.seconds:.3f}s]"
        return text


def _mismatches(expected: dict, actual: Callable[[int, int], int]) -> list[str]:
    bad = []
    for (p, q), want in sorted(expected.items()):
        got = actual(p, q)
        if got != want:
            bad.append(f"h({p},{q})={got} expected {want}")
    return bad


def check_table_small():
    bad = _mismatches(SMALL_TABLE, hamilton.count_ham_paths)
    fib_row = [hamilton.count_ham_paths(p, 3) for p in range(1, 7)]
    if fib_row != [1, 1, 2, 3, 5, 8]:
        bad.append(f"h(p,3) row {fib_row}")
    return not bad, (f"{len(SMALL_TABLE)} printed entries match" if not bad
                     else "; ".join(bad))


def check_table_large():
    bad = _mismatches(LARGE_TABLE, hamilton.count_ham_paths)
    return not bad, (f"{len(LARGE_TABLE)} entries match" if not bad else "; ".join(bad))


def check_count_equality(limit: int = 7):
    bad = []
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            n_paths = sum(1 for _ in hamilton.enumerate_ham_paths(build_grid(p, q)))
            n_tilings = sum(1 for _ in tilings.enumerate_tilings(p, q))
            dp = tilings.count_tilings_exact(p, q)
            if not n_paths == n_tilings == dp:
                bad.append(f"({p},{q}): paths={n_paths} tilings={n_tilings} dp={dp}")
    return not bad, (f"paths = tilings = DP for all p,q <= {limit}" if not bad
                     else "; ".join(bad))


def check_bijection_roundtrip(limit: int = 6):
    bad = []
    pairs = 0
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            grid = build_grid(p, q)
            all_tilings = list(tilings.enumerate_tilings(p, q))
            all_paths = list(hamilton.enumerate_ham_paths(grid))
            images = {}
            for t in all_tilings:
                h = tiling_to_path(grid, t)
                if path_to_tiling(grid, h) != t:
                    bad.append(f"({p},{q}) tiling roundtrip")
                if not verify_avoidance(grid, h, t):
                    bad.append(f"({p},{q}) matched pair not avoiding")
                images[t] = h
                pairs += 1
            for h in all_paths:
                if tiling_to_path(grid, path_to_tiling(grid, h)) != h:
                    bad.append(f"({p},{q}) path roundtrip")
            if len(set(images.values())) != len(all_tilings) or \
                    set(images.values()) != set(all_paths):
                bad.append(f"({p},{q}) images are not exactly the path set")
            if len(all_tilings) >= 2:
                t0, t1 = all_tilings[0], all_tilings[1]
                if verify_avoidance(grid, images[t0], t1) and \
                        verify_avoidance(grid, images[t1], t0):
                    bad.append(f"({p},{q}) no mismatched pair fails avoidance")
    return not bad, (f"{pairs} tiling/path pairs round-trip" if not bad
                     else "; ".join(bad[:10]))


def check_arc_classification(limit: int = 6):
    bad = []
    n = 0
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            grid = build_grid(p, q)
            half = (p - 1) * (q - 1) // 2
            for t in tilings.enumerate_tilings(p, q):
                n += 1
                cls = classify_arcs(grid, t)
                parts = cls.parts()
                union = frozenset().union(*parts)
                if sum(map(len, parts)) != grid.num_arcs or union != grid.arc_set:
                    bad.append(f"({p},{q}) not a partition")
                if len(cls.white_perimeter) != p + q - 2:
                    bad.append(f"({p},{q}) |white perimeter|={len(cls.white_perimeter)}")
                if len(cls.domino_axis) != half or len(cls.domino_black_end) != half:
                    bad.append(f"({p},{q}) axis/black-end sizes")
    return not bad, (f"{n} tilings classified" if not bad else "; ".join(bad[:10]))


def check_kasteleyn(limit: int = 12):
    bad = []
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            k = closed_forms.kasteleyn_count(p, q)
            exact = tilings.count_tilings_exact(p, q)
            if k.rounded != exact or not k.ok() or \
                    (exact and k.relative_error(exact) >= closed_forms.RESIDUAL_TOLERANCE):
                bad.append(f"({p},{q}) product {k.raw!r} vs {exact}")
            if p % 2 == 0 and q % 2 == 0 and k.rounded != 0:
                bad.append(f"({p},{q}) both even but {k.rounded}")
            if min(p, q) <= 1 and k.rounded != 1:
                bad.append(f"({p},{q}) degenerate but {k.rounded}")
    for p in range(1, limit + 1):
        if abs(p - 2) % 2 == 1 and not closed_forms.kasteleyn_min2_check(p):
            bad.append(f"(2,{p}) product is not 1")
    return not bad, (f"product = DP for all p,q <= {limit}" if not bad
                     else "; ".join(bad[:10]))


def check_fibonacci():
    bad = []
    for n in range(1, 11):
        if closed_forms.fibonacci_product(n, "even")[1] != hamilton.fibonacci(2 * n):
            bad.append(f"F_{2 * n} product")
        if closed_forms.fibonacci_product(n, "odd")[1] != hamilton.fibonacci(2 * n + 1):
            bad.append(f"F_{2 * n + 1} product")
    for n in range(1, 13):
        if hamilton.count_ham_paths(3, n) != hamilton.fibonacci(n):
            bad.append(f"h(3,{n}) != F_{n}")
    return not bad, ("F_2n, F_2n+1 products for n <= 10; h(3,n) = F_n for n <= 12"
                     if not bad else "; ".join(bad))


def check_seventeen_gon():
    s = closed_forms.seventeen_gon_values()
    tests = [
        ("Gauss radical", abs(s.radical - s.cosine), 1e-12),
        ("64cos^2(pi/17)", abs(s.cos_sq_identity - s.cos_sq_direct), 1e-12),
        ("x_1 closed form", abs(s.x1_closed_form - s.x[0]), 1e-12),
        ("x_1...x_8 = 1597", abs(s.x_product - F17), 1e-8),
    ]
    bad = [f"{label} off by {err:.3e}" for label, err, tol in tests if not err < tol]
    return not bad, ("4 identities hold" if not bad else "; ".join(bad))


def check_observations(limit: int = 6):
    bad = []
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            grid = build_grid(p, q)
            paths = list(hamilton.enumerate_ham_paths(grid))
            start, end = hamilton.predicted_endpoints(p, q)
            hist = [0] * (p + 1)
            for h in paths:
                if h.vertices[0] != start:
                    bad.append(f"({p},{q}) starts at {h.vertices[0]}")
                if h.vertices[-1] != end:
                    bad.append(f"({p},{q}) ends at {h.vertices[-1]}")
                hist[h.prefix_length()] += 1
            # with p, q both even (p;q) is a second source and no path exists
            sources = hamilton.source_vertices(grid)
            if sources[0] != Vertex(1, 1) or (end is not None and len(sources) != 1):
                bad.append(f"({p},{q}) sources {sources}")
            if hist != hamilton.prefix_counts(p, q):
                bad.append(f"({p},{q}) kernel prefix counts differ")
            # for q = 1 the single path is the whole bottom row, r = p
            if q >= 2 and any(hist[r] for r in range(2, p + 1, 2)):
                bad.append(f"({p},{q}) h_r > 0 for even r")
            if p % 2 and q >= 2 and hist[p] != len(list(
                    hamilton.enumerate_ham_paths(build_grid(p, q - 1)))):
                bad.append(f"({p},{q}) h_p != h(p,q-1)")
            if p == 3 and q >= 3 and hist[1] != len(list(
                    hamilton.enumerate_ham_paths(build_grid(3, q - 2)))):
                bad.append(f"(3,{q}) h_1 != h(3,q-2)")
            if p % 2 and q % 2 and p >= 3 and q >= 3 and \
                    not all(hist[r] > 0 for r in range(1, p + 1, 2)):
                bad.append(f"({p},{q}) some odd h_r is zero")
    return not bad, (f"structural facts hold for all p,q <= {limit}" if not bad
                     else "; ".join(bad[:10]))


def golden_renderings() -> dict[str, str]:
    """The figure reproductions used as determinism fixtures."""
    from .render import RenderSpec, render_ascii, render_svg
    from .tilings import Domino, Orientation, WhiteSide

    g54 = build_grid(5, 4)
    fig2a = figure_path("2a")
    fig3a = path_to_tiling(g54, fig2a)
    domino = Domino((3, 1), Orientation.VERTICAL, WhiteSide.INCREASING)
    out = {
        "fig1.svg": render_svg(g54, None, RenderSpec("grid")),
        "fig2a.svg": render_svg(g54, fig2a, RenderSpec("path")),
        "fig2b.svg": render_svg(g54, figure_path("2b"), RenderSpec("path")),
        "fig3a.svg": render_svg(g54, fig3a, RenderSpec("tiling")),
        "fig4.svg": render_svg(g54, domino, RenderSpec("canonical-numbering")),
        "fig5.svg": render_svg(g54, None, RenderSpec("chessboard")),
        "fig6.svg": render_svg(g54, None, RenderSpec("arc-set-a")),
        "fig7b.svg": render_svg(g54, (fig2a, fig3a), RenderSpec("path-with-tiling")),
        "fig1.txt": render_ascii(g54, None, RenderSpec("grid")),
        "fig2a.txt": render_ascii(g54, fig2a, RenderSpec("path")),
    }
    return out


def figure_path(which: str) -> hamilton.HamPath:
    """The two example Hamiltonian paths drawn on DGG_{5,4}."""
    walks = {
        "2a": [(1, 1), (2, 1), (3, 1), (3, 2), (2, 2), (1, 2), (1, 3), (2, 3), (3, 3),
               (4, 3), (4, 2), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4), (4, 4), (3, 4),
               (2, 4), (1, 4)],
        "2b": [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (4, 2), (3, 2), (2, 2),
               (1, 2), (1, 3), (2, 3), (3, 3), (4, 3), (5, 3), (5, 4), (4, 4), (3, 4),
               (2, 4), (1, 4)],
    }
    return hamilton.HamPath.from_dict({"p": 5, "q": 4, "vertices": walks[which]})


def check_determinism():
    first, second = golden_renderings(), golden_renderings()
    table = [[hamilton.count_ham_paths(p, q) for p in range(1, 10)] for q in range(1, 10)]
    table2 = [[hamilton.count_ham_paths(p, q) for p in range(1, 10)] for q in range(1, 10)]
    same = first == second and table == table2
    return same, (f"{len(first)} renderings and the 9x9 table are byte-identical"
                  if same else "repeated output differs")


# (name, section, function, runtime budget in seconds)
CHECKS = [
    ("table-small", "tables", check_table_small, 1.0),
    ("table-large", "tables", check_table_large, 1.0),
    ("count-equality", "counts", check_count_equality, 60.0),
    ("bijection-roundtrip", "bijection", check_bijection_roundtrip, 30.0),
    ("arc-classification", "arcs", check_arc_classification, None),
    ("kasteleyn", "kasteleyn", check_kasteleyn, 1.0),
    ("fibonacci", "fibonacci", check_fibonacci, None),
    ("17gon", "17gon", check_seventeen_gon, 1.0),
    ("observations", "observations", check_observations, None),
    ("determinism", "determinism", check_determinism, None),
]

SECTIONS = tuple(dict.fromkeys(section for _, section, _, _ in CHECKS))


def run_check(name: str) -> CheckResult:
    for check_name, _, func, budget in CHECKS:
        if check_name == name:
            break
    else:
        raise KeyError(name)
    t0 = time.perf_counter()
    try:
        passed, detail = func()
    except Exception as exc:  # a crash is a failed check, not a crashed run
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - t0
    if budget is not None and seconds > budget:
        passed = False
        detail += f" (over the {budget:g}s budget)"
    return CheckResult(check_name, passed, detail, seconds, budget)


def run_checks(sections=None) -> list[CheckResult]:
    wanted = set(sections) if sections else None
    return [run_check(name) for name, section, _, _ in CHECKS
            if wanted is None or section in wanted or name in wanted]
