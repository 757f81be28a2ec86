"""Spanned-line enumeration, incidence summaries and the two-line cover test."""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import EmptySet, TooFewPoints
from .geometry import CanonicalLine, PointSet, collinear, line_through


@dataclass(frozen=True)
class SpannedLineRecord:
    line: CanonicalLine
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)

    def __contains__(self, index: int) -> bool:
        i = bisect_left(self.incident, index)
        return i < len(self.incident) and self.incident[i] == index


@dataclass(frozen=True)
class SpannedLineSet:
    """All lines through at least two points, sorted by canonical line."""

    n: int
    records: tuple[SpannedLineRecord, ...]
    _by_line: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_line", {r.line: r for r in self.records})

    @property
    def line_count(self) -> int:
        return len(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def get(self, line: CanonicalLine) -> Optional[SpannedLineRecord]:
        return self._by_line.get(line)

    def lines_through(self, index: int) -> list[SpannedLineRecord]:
        return [r for r in self.records if index in r]

    def profile(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.records:
            out[r.multiplicity] = out.get(r.multiplicity, 0) + 1
        return dict(sorted(out.items()))


@dataclass(frozen=True)
class IncidenceSummary:
    n: int
    line_count: int
    incidences: int
    profile: dict[int, int]
    max_multiplicity: int
    degree: dict[int, int]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "line_count": self.line_count,
            "incidences": self.incidences,
            "profile": {str(k): v for k, v in sorted(self.profile.items())},
            "max_multiplicity": self.max_multiplicity,
        }


def _integer_coordinates(P: PointSet) -> tuple[list[int], list[int], int]:
    den = 1
    for p in P:
        den = math.lcm(den, p.x.denominator, p.y.denominator)
    xs = [int(p.x * den) for p in P]
    ys = [int(p.y * den) for p in P]
    return xs, ys, den


# numpy path is exact only while every intermediate fits in int64
_NUMPY_COORD_LIMIT = 1 << 29
_NUMPY_DEN_LIMIT = 1 << 32


def spanned_lines(P: PointSet, *, engine: str = "auto") -> SpannedLineSet:
    """Enumerate every spanned line with its sorted incident indices.

    ``engine`` is ``"auto"``, ``"numpy"`` or ``"python"``; auto picks the
    vectorized path whenever the scaled coordinates are small enough for
    int64 arithmetic to stay exact.
    """
    n = len(P)
    if n < 2:
        raise TooFewPoints(f"need at least 2 points, got {n}")
    xs, ys, den = _integer_coordinates(P)
    if engine == "auto":
        small = den <= _NUMPY_DEN_LIMIT and all(
            abs(v) <= _NUMPY_COORD_LIMIT for v in xs + ys
        )
        engine = "numpy" if small else "python"
    if engine == "numpy":
        records = _spanned_numpy(xs, ys, den)
    elif engine == "python":
        records = _spanned_python(xs, ys, den)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return SpannedLineSet(n, tuple(records))


def _spanned_python(xs: list[int], ys: list[int], den: int) -> list[SpannedLineRecord]:
    # For each i, later points are grouped by reduced direction from i.  A
    # group is kept only the first time its line is seen, i.e. at the line's
    # smallest member, so the member list is already complete and sorted.
    n = len(xs)
    gcd = math.gcd
    seen: set[tuple[int, int, int]] = set()
    found: list[tuple[tuple[int, int, int], list[int]]] = []
    for i in range(n):
        xi, yi = xs[i], ys[i]
        groups: dict[tuple[int, int], list[int]] = {}
        for j in range(i + 1, n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            g = gcd(dx, dy)
            dx //= g
            dy //= g
            if dy < 0 or (dy == 0 and dx < 0):
                dx, dy = -dx, -dy
            key = (dx, dy)
            members = groups.get(key)
            if members is None:
                groups[key] = [i, j]
            else:
                members.append(j)
        for (dx, dy), members in groups.items():
            # scaled line dy*X - dx*Y + c = 0 through (xi, yi)
            scaled = (dy, -dx, dx * yi - dy * xi)
            if scaled in seen:
                continue
            seen.add(scaled)
            found.append((scaled, members))
    from_integers = CanonicalLine.from_integers
    records = [
        SpannedLineRecord(from_integers(a * den, b * den, c), tuple(members))
        for (a, b, c), members in found
    ]
    records.sort(key=lambda r: r.line)
    return records


def _spanned_numpy(xs: list[int], ys: list[int], den: int) -> list[SpannedLineRecord]:
    n = len(xs)
    X = np.asarray(xs, dtype=np.int64)
    Y = np.asarray(ys, dtype=np.int64)
    I, J = np.triu_indices(n, 1)
    dx = X[J] - X[I]
    dy = Y[J] - Y[I]
    g = np.gcd(dx, dy)
    a = dy // g
    b = -(dx // g)
    flip = (a < 0) | ((a == 0) & (b < 0))
    a[flip] = -a[flip]
    b[flip] = -b[flip]
    c = -(a * X[I] + b * Y[I])
    if den != 1:
        # gcd(a, b) = 1, so gcd(a*den, b*den, c) = gcd(den, c)
        g = np.gcd(c, np.int64(den))
        a = a * (den // g)
        b = b * (den // g)
        c = c // g
    order = np.lexsort((c, b, a))
    a, b, c = a[order], b[order], c[order]
    I, J = I[order], J[order]
    new_line = np.empty(len(a), dtype=bool)
    new_line[0] = True
    new_line[1:] = (a[1:] != a[:-1]) | (b[1:] != b[:-1]) | (c[1:] != c[:-1])
    line_id = np.cumsum(new_line) - 1
    firsts = np.flatnonzero(new_line)
    keys = np.unique(np.concatenate((line_id * n + I, line_id * n + J)))
    owner = keys // n
    members = (keys % n).tolist()
    starts = np.flatnonzero(np.r_[True, owner[1:] != owner[:-1]]).tolist()
    starts.append(len(members))
    la, lb, lc = a[firsts].tolist(), b[firsts].tolist(), c[firsts].tolist()
    records = []
    for k in range(len(firsts)):
        line = CanonicalLine.__new__(CanonicalLine)
        object.__setattr__(line, "a", la[k])
        object.__setattr__(line, "b", lb[k])
        object.__setattr__(line, "c", lc[k])
        records.append(SpannedLineRecord(line, tuple(members[starts[k]:starts[k + 1]])))
    return records


def summarize(P: PointSet, S: SpannedLineSet) -> IncidenceSummary:
    degree = {i: 0 for i in range(len(P))}
    incidences = 0
    for r in S:
        incidences += r.multiplicity
        for i in r.incident:
            degree[i] += 1
    profile = S.profile()
    return IncidenceSummary(
        n=len(P),
        line_count=S.line_count,
        incidences=incidences,
        profile=profile,
        max_multiplicity=max(profile) if profile else 0,
        degree=degree,
    )


def analyze(P: PointSet) -> tuple[SpannedLineSet, IncidenceSummary]:
    S = spanned_lines(P)
    return S, summarize(P, S)


def _first_non_collinear_triple(P: PointSet) -> Optional[tuple[int, int, int]]:
    n = len(P)
    if n < 3:
        return None
    for k in range(2, n):
        if not collinear(P[0], P[1], P[k]):
            return 0, 1, k
    return None


def _residual_line(P: PointSet, cover: CanonicalLine) -> Optional[CanonicalLine]:
    """A line containing every point off ``cover``, or None if impossible.

    Returns ``cover`` itself when at most one point is off it and there is
    nothing left to pin down a second line.
    """
    rest = [p for p in P if not cover.contains(p)]
    if not rest:
        return cover
    if len(rest) == 1:
        p = rest[0]
        # any line through p will do; pick the one parallel to an axis
        return CanonicalLine.from_coefficients(1, 0, -p.x)
    line = line_through(rest[0], rest[1])
    if all(line.contains(p) for p in rest[2:]):
        return line
    return None


def covered_by_two_lines(P: PointSet) -> Optional[tuple[CanonicalLine, CanonicalLine]]:
    """Witness pair of lines whose union contains P, or None.

    For collinear P both entries are the same line.
    """
    n = len(P)
    if n == 0:
        raise EmptySet("point set is empty")
    if n == 1:
        p = P[0]
        line = CanonicalLine.from_coefficients(1, 0, -p.x)
        return line, line
    triple = _first_non_collinear_triple(P)
    if triple is None:
        line = line_through(P[0], P[1])
        return line, line
    a, b, c = (P[i] for i in triple)
    for first in (line_through(a, b), line_through(a, c), line_through(b, c)):
        second = _residual_line(P, first)
        if second is not None:
            return first, second
    return None


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def lambda_threshold_met(multiplicity: int, n: int, lam: Fraction) -> bool:
    return multiplicity >= lam * n
