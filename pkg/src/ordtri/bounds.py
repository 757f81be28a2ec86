"""High-precision evaluation of the counting bound for the no-rich-line case.

Real-valued quantities are mpmath numbers evaluated at ``dps`` significant
digits (50 by default).  The one comparison that decides the threshold,
final_bound(n) < c, is also done exactly in integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath
from mpmath import mpf

from .errors import DegenerateDenominator, Unreachable
from .ordinary import lambda_of

DEFAULT_DPS = 50

__all__ = [
    "BoundParameters",
    "BoundReport",
    "bound_report",
    "case2_bound",
    "final_bound",
    "final_bound_below",
    "lambda_of",
    "limit_constant",
    "regime_bound",
    "threshold_n",
]


def limit_constant(dps: int = DEFAULT_DPS) -> mpf:
    """3(sqrt 6 + 1), the n -> infinity value of :func:`final_bound`."""
    with mpmath.workdps(dps):
        return 3 * (mpmath.sqrt(6) + 1)


def case2_bound(n: int, l: int, line_count: int, dps: int = DEFAULT_DPS) -> mpf:
    """(6 sqrt|L| + n) / (l - 3 sqrt l) for a point of degree l."""
    if l <= 9:
        raise DegenerateDenominator(f"l - 3*sqrt(l) <= 0 for l = {l}")
    with mpmath.workdps(dps):
        return (6 * mpmath.sqrt(line_count) + n) / (l - 3 * mpmath.sqrt(l))


def regime_bound(n: int, B, dps: int = DEFAULT_DPS) -> mpf:
    """(6B + B^2) / (2 - 3B sqrt(2/n)) for |L| = n^2/B^2, B in [sqrt 2, sqrt 6)."""
    with mpmath.workdps(dps):
        B = mpf(B)
        if not (mpmath.sqrt(2) <= B < mpmath.sqrt(6)):
            raise ValueError(f"B = {B} outside [sqrt 2, sqrt 6)")
        den = 2 - 3 * B * mpmath.sqrt(mpf(2) / n)
        if den <= 0:
            raise DegenerateDenominator(f"2 - 3B sqrt(2/n) <= 0 for n = {n}, B = {B}")
        return (6 * B + B * B) / den


def final_bound(n: int, dps: int = DEFAULT_DPS) -> mpf:
    """3(sqrt 6 + 1) / (1 - 3 sqrt(3/n)); positive denominator needs n > 27."""
    if n <= 27:
        raise DegenerateDenominator(f"1 - 3*sqrt(3/n) <= 0 for n = {n}")
    with mpmath.workdps(dps):
        return 3 * (mpmath.sqrt(6) + 1) / (1 - 3 * mpmath.sqrt(mpf(3) / n))


def _exceeds_limit(c: int) -> bool:
    # c > 3 + 3 sqrt 6  <=>  c - 3 > 0 and (c - 3)^2 > 54
    return c > 3 and (c - 3) ** 2 > 54


def final_bound_below(n: int, c: int) -> bool:
    """Exact test of final_bound(n) < c for integer n > 27 and integer c.

    With s = sqrt n and 1 - 3 sqrt3/s > 0:
        3 sqrt6 + 3 < c - 3c sqrt3/s
    <=> 3c sqrt3 < (c - 3 - 3 sqrt6) s          (needs c - 3 - 3 sqrt6 > 0)
    <=> 27c^2 < ((c-3)^2 + 54) n - 6(c-3) n sqrt6      (square; both sides > 0)
    <=> 6(c-3) n sqrt6 < A,  A = ((c-3)^2 + 54) n - 27c^2
    <=> A > 0 and 216 (c-3)^2 n^2 < A^2                 (square again)
    """
    if n <= 27:
        raise DegenerateDenominator(f"1 - 3*sqrt(3/n) <= 0 for n = {n}")
    if not _exceeds_limit(c):
        return False
    A = ((c - 3) ** 2 + 54) * n - 27 * c * c
    return A > 0 and 216 * (c - 3) ** 2 * n * n < A * A


def threshold_n(c: int, dps: int = DEFAULT_DPS) -> int:
    """Smallest n with final_bound(n) < c.

    The search runs on the exact predicate; the crossing is then confirmed
    at ``dps`` digits and any disagreement is an error.
    """
    if not _exceeds_limit(c):
        raise Unreachable(f"c = {c} does not exceed 3(sqrt 6 + 1); no finite n works")
    lo, hi = 27, 28
    while not final_bound_below(hi, c):
        lo, hi = hi, hi * 2
    # invariant: not below at lo (or lo = 27, outside the domain), below at hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if final_bound_below(mid, c):
            hi = mid
        else:
            lo = mid
    if not final_bound(hi, dps) < c:
        raise ArithmeticError(f"high-precision check disagrees at n = {hi}")
    if hi - 1 > 27 and not final_bound(hi - 1, dps) >= c:
        raise ArithmeticError(f"high-precision check disagrees at n = {hi - 1}")
    return hi


@dataclass(frozen=True)
class BoundParameters:
    n: int
    c: Optional[int] = None
    l: Optional[int] = None
    line_count: Optional[int] = None
    B: Optional[mpf] = None

    @property
    def lam(self) -> Optional[Fraction]:
        return lambda_of(self.c) if self.c is not None else None


@dataclass(frozen=True)
class BoundReport:
    inputs: BoundParameters
    regime: str
    case2_bound: Optional[mpf]
    final_bound: mpf
    triangle_forced: Optional[bool]
    dps: int = DEFAULT_DPS

    def to_json(self) -> dict:
        def fmt(x):
            return None if x is None else mpmath.nstr(x, self.dps, strip_zeros=False)

        p = self.inputs
        return {
            "inputs": {
                "n": p.n,
                "c": p.c,
                "lambda": None if p.lam is None else str(p.lam),
                "l": p.l,
                "line_count": p.line_count,
                "B": fmt(p.B),
            },
            "regime": self.regime,
            "case2_bound": fmt(self.case2_bound),
            "final_bound": fmt(self.final_bound),
            "triangle_forced": self.triangle_forced,
            "precision": self.dps,
        }


def bound_report(
    n: int,
    c: Optional[int] = None,
    l: Optional[int] = None,
    line_count: Optional[int] = None,
    B=None,
    dps: int = DEFAULT_DPS,
) -> BoundReport:
    """Evaluate the bound chain for the given inputs.

    The regime is ``large_L`` when B is given or |L| > n^2/6, ``small_L``
    otherwise.  In the large regime B defaults to n / sqrt|L|.
    """
    with mpmath.workdps(dps):
        if B is not None:
            B = mpf(B)
            regime = "large_L"
        elif line_count is not None and 6 * line_count > n * n:
            B = n / mpmath.sqrt(line_count)
            regime = "large_L"
        else:
            regime = "small_L"
        if regime == "large_L":
            value = regime_bound(n, B, dps)
            forced = None if c is None else bool(c > value)
        else:
            value = final_bound(n, dps)
            forced = None if c is None else final_bound_below(n, c)
        c2 = case2_bound(n, l, line_count, dps) if l is not None and line_count is not None else None
    params = BoundParameters(n, c, l, line_count, B)
    return BoundReport(params, regime, c2, value, forced, dps)
