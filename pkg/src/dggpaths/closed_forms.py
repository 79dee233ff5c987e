"""Floating-point evaluation of the product formulas for h(p, q).

Everything here is a numeric cross-check of the exact integer counts in
:mod:`dggpaths.tilings`; values are computed in ``numpy.longdouble``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

LD = np.longdouble
PI = LD(np.pi)
# numpy.pi is the double nearest to pi; refine it when long double is wider
if np.finfo(LD).eps < np.finfo(np.float64).eps:
    PI = LD("3.14159265358979323846264338327950288")

#: Relative residual allowed between a product formula and its integer.
RESIDUAL_TOLERANCE = 1e-6

_EXACT_FLOAT_LIMIT = 2 ** 53


@dataclass(frozen=True)
class KasteleynResult:
    raw: float
    rounded: int
    residual: float

    def ok(self, tolerance: float = RESIDUAL_TOLERANCE) -> bool:
        return self.residual < tolerance * max(1, self.rounded)

    def relative_error(self, exact: int) -> float:
        """|raw - exact| / max(1, exact), for comparing against an exact count."""
        return float(abs(LD(self.raw) - LD(exact)) / LD(max(1, exact)))


def _cos_sq4(num: int, den: int):
    c = np.cos(PI * LD(num) / LD(den))
    return LD(4) * c * c


def kasteleyn_factors(p: int, q: int) -> list:
    """Factors 4cos^2(m pi/p) + 4cos^2(k pi/q), for 1 <= 2m <= p, 1 <= 2k <= q."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    return [_cos_sq4(m, p) + _cos_sq4(k, q)
            for m in range(1, p // 2 + 1) for k in range(1, q // 2 + 1)]


def _product(factors) -> tuple[object, object]:
    """(product, log of product); log is -inf when a factor vanishes."""
    prod = LD(1)
    log = LD(0)
    for f in factors:
        prod *= f
        log = log + np.log(f) if f > 0 else LD(-np.inf)
    return prod, log


def kasteleyn_count(p: int, q: int) -> KasteleynResult:
    """Kasteleyn's product for the domino tilings of the (p-1) x (q-1) board.

    For odd p the m-range 2m < p and 2m <= p coincide; for even p the
    m = p/2 factors are included, which is what makes the product vanish
    when p and q are both even.
    """
    factors = kasteleyn_factors(p, q)
    prod, log = _product(factors)
    if np.isfinite(log) and log > math.log(_EXACT_FLOAT_LIMIT):
        raw = np.exp(log)
    else:
        raw = prod
    rounded = int(np.rint(raw))
    return KasteleynResult(float(raw), rounded, float(abs(raw - LD(rounded))))


def fibonacci_product(n: int, parity: str) -> tuple[float, int]:
    """Trigonometric products equal to F_2n ("even") or F_2n+1 ("odd")."""
    if n < 1:
        raise ValueError("n must be positive")
    if parity == "even":
        factors = [LD(1) + _cos_sq4(k, 2 * n) for k in range(1, n)]
    elif parity == "odd":
        factors = [LD(1) + _cos_sq4(k, 2 * n + 1) for k in range(1, n + 1)]
    else:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    prod, _ = _product(factors)
    return float(prod), int(np.rint(prod))


@dataclass(frozen=True)
class SeventeenGonValues:
    v: float
    w: float
    x: tuple[float, ...]
    radical: float          # the nested-radical value of 16 cos(2 pi / 17)
    cosine: float           # 16 cos(2 pi / 17) computed directly
    cos_sq_identity: float  # 64 + (2 - v) v + 4 w
    cos_sq_direct: float    # 64 cos^2(pi / 17)
    x1_closed_form: float   # 5 + (2 - v) v / 16 + w / 4

    @property
    def x_product(self) -> float:
        return math.prod(self.x)


def seventeen_gon_values() -> SeventeenGonValues:
    s17 = np.sqrt(LD(17))
    v = np.sqrt(LD(34) - 2 * s17)
    w = np.sqrt(LD(17) + 3 * s17 - np.sqrt(LD(170) + 38 * s17))
    radical = s17 - 1 + v + 2 * w
    cosine = 16 * np.cos(2 * PI / 17)
    x = tuple(float(LD(1) + _cos_sq4(k, 17)) for k in range(1, 9))
    c = np.cos(PI / 17)
    return SeventeenGonValues(
        v=float(v), w=float(w), x=x,
        radical=float(radical), cosine=float(cosine),
        cos_sq_identity=float(64 + (2 - v) * v + 4 * w),
        cos_sq_direct=float(64 * c * c),
        x1_closed_form=float(5 + (2 - v) * v / 16 + w / 4),
    )


def kasteleyn_min2_check(p: int) -> bool:
    """True iff the product for a 2 x p grid rounds to 1 (needs |p - 2| odd)."""
    if p < 1 or abs(p - 2) % 2 != 1:
        raise ValueError(f"|p - 2| must be odd, got p={p}")
    return kasteleyn_count(2, p).rounded == 1
