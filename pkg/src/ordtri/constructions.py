"""Extremal constructions and fixture families.

``random_rational`` follows a fixed, versioned scheme so fixtures can be
reproduced elsewhere:

    scheme v1: rng = random.Random(seed)  (Mersenne Twister)
    repeat until n distinct points:
        for each coordinate: d = rng.randint(1, max_den)
                             m = rng.randint(-bound * d, bound * d)
                             value = m / d
    duplicates are rejected and redrawn.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .errors import (
    DuplicateBlockerLines,
    InvalidParameters,
    LineHitsPointSet,
    ParallelSpannedLine,
)
from .geometry import CanonicalLine, Point, PointSet, intersect
from .incidence import SpannedLineSet, spanned_lines

RANDOM_SCHEME_VERSION = 1

KINDS = (
    "blocker",
    "k_line_blocker",
    "grid",
    "random_rational",
    "two_line_config",
    "near_pencil",
    "cubic_family",
)


def _check_blocker_line(P: PointSet, S: Optional[SpannedLineSet], line: CanonicalLine) -> None:
    for p in P:
        if line.contains(p):
            raise LineHitsPointSet(f"{line} passes through {p}")
    if S is None:
        return
    for record in S:
        if record.line.is_parallel(line):
            raise ParallelSpannedLine(line, record.line)


def _blocker_points(S: Optional[SpannedLineSet], line: CanonicalLine) -> list[Point]:
    if S is None:
        return []
    return [intersect(record.line, line) for record in S]


def blocker(P: PointSet, line: CanonicalLine) -> PointSet:
    """Add the meeting point of ``line`` with every spanned line of P.

    The result has no 2-ordinary triangle: any two original points span a
    line that now carries a third point on ``line``.
    """
    return k_line_blocker(P, [line])


def k_line_blocker(P: PointSet, lines: Sequence[CanonicalLine]) -> PointSet:
    if len(set(lines)) != len(lines):
        raise DuplicateBlockerLines("blocker lines must be pairwise distinct")
    S = spanned_lines(P) if len(P) >= 2 else None
    for line in lines:
        _check_blocker_line(P, S, line)
    added: list[Point] = []
    for line in lines:
        added.extend(_blocker_points(S, line))
    return P.extended(added)


def _candidate_blocker_lines() -> Iterable[CanonicalLine]:
    x = 0
    while True:
        x += 1
        yield CanonicalLine.from_coefficients(1, 0, -x)
        for slope in range(1, 4):
            # y = slope * x + x  and  y = -slope * x - x
            yield CanonicalLine.from_coefficients(slope, -1, x)
            yield CanonicalLine.from_coefficients(slope, 1, x)


def find_blocker_line(P: PointSet, max_tries: int = 100_000) -> CanonicalLine:
    """First candidate line that avoids P and meets every spanned line.

    Candidates are vertical lines x = 1, 2, ... interleaved with a few
    slanted families, in a fixed order.
    """
    S = spanned_lines(P) if len(P) >= 2 else None
    for tries, line in enumerate(_candidate_blocker_lines()):
        if tries >= max_tries:
            break
        try:
            _check_blocker_line(P, S, line)
        except (LineHitsPointSet, ParallelSpannedLine):
            continue
        return line
    raise InvalidParameters(f"no blocker line found in {max_tries} candidates")


def grid(w: int, h: int) -> PointSet:
    if w < 1 or h < 1:
        raise InvalidParameters(f"grid dimensions must be positive, got {w}x{h}")
    return PointSet((x, y) for x in range(w) for y in range(h))


def _coordinate_values(bound: int, max_den: int) -> int:
    """How many distinct m/d lie in [-bound, bound] with 1 <= d <= max_den."""
    unit = len({Fraction(m, d) for d in range(1, max_den + 1) for m in range(1, d + 1)})
    return 2 * bound * unit + 1


def random_rational(n: int, seed: int, bound: int = 100, max_den: int = 10) -> PointSet:
    if n < 0 or bound < 1 or max_den < 1:
        raise InvalidParameters(f"bad random_rational parameters n={n} bound={bound} max_den={max_den}")
    if n > _coordinate_values(bound, max_den) ** 2:
        raise InvalidParameters(f"cannot draw {n} distinct points with bound {bound}")
    rng = random.Random(seed)

    def draw() -> Fraction:
        d = rng.randint(1, max_den)
        return Fraction(rng.randint(-bound * d, bound * d), d)

    pts: list[Point] = []
    seen: set[Point] = set()
    while len(pts) < n:
        p = Point(draw(), draw())
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return PointSet(pts)


def two_line_config(a: int, b: int, extra: Iterable[Sequence] = ()) -> PointSet:
    """(1..a, 0) on the x-axis, (0, 1..b) on the y-axis, then ``extra``.

    The origin is left out so the two lines share no point of the set.
    """
    if a < 0 or b < 0:
        raise InvalidParameters("line sizes must be non-negative")
    pts = [Point(x, 0) for x in range(1, a + 1)]
    pts += [Point(0, y) for y in range(1, b + 1)]
    pts += [p if isinstance(p, Point) else Point(*p) for p in extra]
    return PointSet(pts)


def near_pencil(k: int) -> PointSet:
    """k points on the x-axis plus the apex (0, 1)."""
    if k < 1:
        raise InvalidParameters(f"near_pencil needs k >= 1, got {k}")
    return PointSet([Point(x, 0) for x in range(k)] + [Point(0, 1)])


def cubic_family(params: Iterable) -> PointSet:
    """Points (t, t^3); three of them are collinear iff their t's sum to 0."""
    ts = [Fraction(t) for t in params]
    if len(set(ts)) != len(ts):
        raise InvalidParameters("cubic_family parameters must be distinct")
    return PointSet(Point(t, t ** 3) for t in ts)


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameters(f"unknown construction kind {self.kind!r}")


def _as_line(value) -> CanonicalLine:
    if isinstance(value, CanonicalLine):
        return value
    return CanonicalLine.from_coefficients(*value)


def _as_spec(value) -> ConstructionSpec:
    if isinstance(value, ConstructionSpec):
        return value
    return ConstructionSpec(value["kind"], dict(value.get("params", {})))


def generate(spec: ConstructionSpec) -> PointSet:
    """Build the point set described by ``spec``.

    Blocker kinds take ``base`` (a nested spec) and optional ``lines``
    (coefficient triples); without lines the first admissible candidate from
    :func:`find_blocker_line` is used.
    """
    p = spec.params
    try:
        if spec.kind == "grid":
            return grid(int(p["w"]), int(p["h"]))
        if spec.kind == "random_rational":
            return random_rational(
                int(p["n"]), int(p["seed"]), int(p.get("bound", 100)), int(p.get("max_den", 10))
            )
        if spec.kind == "two_line_config":
            return two_line_config(int(p["a"]), int(p["b"]), p.get("extra", ()))
        if spec.kind == "near_pencil":
            return near_pencil(int(p["k"]))
        if spec.kind == "cubic_family":
            return cubic_family(p["params"])
        base = generate(_as_spec(p["base"]))
        if spec.kind == "blocker":
            line = _as_line(p["line"]) if "line" in p else find_blocker_line(base)
            return blocker(base, line)
        lines = [_as_line(v) for v in p.get("lines", ())]
        return k_line_blocker(base, lines)
    except KeyError as exc:
        raise InvalidParameters(f"{spec.kind}: missing parameter {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        raise InvalidParameters(f"{spec.kind}: {exc}") from None
