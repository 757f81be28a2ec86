"""Exact rational points, canonical integer lines and the basic predicates.

No floating point is used anywhere here; every count built on top of these
predicates has to be exact.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import (
    CoincidentLines,
    DuplicatePoint,
    IdenticalPoints,
    PointFormatError,
)

Number = Union[int, Fraction, str]


@dataclass(frozen=True, order=True)
class Point:
    """Planar point with arbitrary-precision rational coordinates."""

    x: Fraction
    y: Fraction

    def __init__(self, x: Number, y: Number):
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({format_rational(self.x)}, {format_rational(self.y)})"

    def as_strings(self) -> list[str]:
        return [format_rational(self.x), format_rational(self.y)]


@dataclass(frozen=True, order=True)
class CanonicalLine:
    """The line ``a*x + b*y + c = 0`` in reduced, sign-normalized form.

    Use :meth:`from_coefficients` to build one from arbitrary rational
    coefficients; the constructor expects an already canonical triple.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("(a, b) must not both be zero")
        if math.gcd(self.a, self.b, self.c) != 1:
            raise ValueError(f"coefficients not reduced: {(self.a, self.b, self.c)}")
        lead = self.a if self.a != 0 else self.b
        if lead < 0:
            raise ValueError(f"first nonzero coefficient must be positive: {(self.a, self.b, self.c)}")

    @classmethod
    def from_coefficients(cls, a: Number, b: Number, c: Number) -> "CanonicalLine":
        fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
        den = math.lcm(fa.denominator, fb.denominator, fc.denominator)
        ia = int(fa * den)
        ib = int(fb * den)
        ic = int(fc * den)
        return cls.from_integers(ia, ib, ic)

    @classmethod
    def from_integers(cls, a: int, b: int, c: int) -> "CanonicalLine":
        """Normalize an integer triple; skips the validation in ``__init__``."""
        line = object.__new__(cls)
        a, b, c = _normalize(a, b, c)
        object.__setattr__(line, "a", a)
        object.__setattr__(line, "b", b)
        object.__setattr__(line, "c", c)
        return line

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y + self.c == 0

    def is_parallel(self, other: "CanonicalLine") -> bool:
        return self.a * other.b - self.b * other.a == 0

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c]

    def __str__(self) -> str:
        return f"{self.a}x + {self.b}y + {self.c} = 0"


def _normalize(a: int, b: int, c: int) -> tuple[int, int, int]:
    if a == 0 and b == 0:
        raise ValueError("(a, b) must not both be zero")
    g = math.gcd(a, b, c)
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return a, b, c


def line_through(p: Point, q: Point) -> CanonicalLine:
    """Canonical line through two distinct points."""
    if p == q:
        raise IdenticalPoints(f"{p} and {q} coincide")
    a = p.y - q.y
    b = q.x - p.x
    c = p.x * q.y - q.x * p.y
    return CanonicalLine.from_coefficients(a, b, c)


def orientation(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area of pqr (positive for a left turn)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return orientation(p, q, r) == 0


def intersect(l1: CanonicalLine, l2: CanonicalLine) -> Optional[Point]:
    """Unique common point of two distinct lines, or None when parallel."""
    if l1 == l2:
        raise CoincidentLines(str(l1))
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l2.a * l1.c - l1.a * l2.c, det)
    return Point(x, y)


class PointSet(Sequence[Point]):
    """Ordered, duplicate-free collection of points.

    Indices are stable identifiers for the lifetime of the set.
    """

    __slots__ = ("_points", "_index")

    def __init__(self, points: Iterable[Union[Point, Sequence[Number]]] = ()):
        pts: list[Point] = []
        index: dict[Point, int] = {}
        for raw in points:
            p = raw if isinstance(raw, Point) else Point(*raw)
            if p in index:
                raise DuplicatePoint(f"{p} appears at indices {index[p]} and {len(pts)}")
            index[p] = len(pts)
            pts.append(p)
        self._points = tuple(pts)
        self._index = index

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    @property
    def n(self) -> int:
        return len(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, i):
        return self._points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __contains__(self, p) -> bool:
        return p in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet({list(self._points)!r})"

    def index_of(self, p: Point) -> int:
        return self._index[p]

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(self._points[i] for i in indices)

    def extended(self, extra: Iterable[Point]) -> "PointSet":
        """Append points not already present, keeping first occurrences."""
        pts = list(self._points)
        seen = set(self._index)
        for p in extra:
            if p not in seen:
                seen.add(p)
                pts.append(p)
        return PointSet(pts)


# -- point-set text format ----------------------------------------------------

_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    if not _NUMBER.match(token):
        raise ValueError(f"not an integer or fraction: {token!r}")
    value = Fraction(token)
    return value


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_points(text: str) -> PointSet:
    """Parse the ``x y`` per line format; ``#`` starts a comment."""
    points: list[Point] = []
    seen: dict[Point, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PointFormatError(lineno, f"expected 2 coordinates, got {len(fields)}")
        try:
            x, y = (parse_rational(f) for f in fields)
        except (ValueError, ZeroDivisionError) as exc:
            raise PointFormatError(lineno, str(exc)) from None
        p = Point(x, y)
        if p in seen:
            raise PointFormatError(lineno, f"duplicate of point on line {seen[p]}")
        seen[p] = lineno
        points.append(p)
    return PointSet(points)


def format_points(points: Iterable[Point], header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"{format_rational(p.x)} {format_rational(p.y)}" for p in points)
    return "\n".join(lines) + "\n"


def read_points(path) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def write_points(path, points: Iterable[Point], header: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_points(points, header))
