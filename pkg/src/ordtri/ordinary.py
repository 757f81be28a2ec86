"""c-ordinary lines and triangles.

Besides brute-force search this holds the constructive procedure for the
case where one spanned line carries a λ-fraction of the points, and the
neighborhood sets used in the counting argument for the other case.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (
    AnchorOnLine,
    CollinearSet,
    DuplicateIndices,
    InternalError,
    NoRichLine,
    SamePoint,
    TooFewPoints,
    Unsatisfied,
)
from .geometry import CanonicalLine, PointSet, line_through
from .incidence import SpannedLineRecord, SpannedLineSet, spanned_lines


@dataclass(frozen=True)
class TriangleCertificate:
    indices: tuple[int, int, int]
    c: int
    side_multiplicities: tuple[int, int, int]

    def to_json(self, P: PointSet) -> dict:
        return {
            "indices": list(self.indices),
            "points": [P[i].as_strings() for i in self.indices],
            "side_multiplicities": list(self.side_multiplicities),
            "c": self.c,
        }


@dataclass(frozen=True)
class RestrictedSet:
    anchor: int
    members: tuple[int, ...]


def lambda_of(c: int) -> Fraction:
    """Richness fraction 5 / (2(c+1)) separating the two proof cases."""
    if c < 1:
        raise ValueError(f"c must be at least 1, got {c}")
    return Fraction(5, 2 * (c + 1))


def line_record(P: PointSet, S: SpannedLineSet, p: int, q: int) -> SpannedLineRecord:
    if p == q:
        raise SamePoint(f"index {p} given twice")
    record = S.get(line_through(P[p], P[q]))
    if record is None:
        raise InternalError(f"line through {p} and {q} missing from spanned-line set")
    return record


def line_multiplicity(P: PointSet, S: SpannedLineSet, p: int, q: int) -> int:
    """Number of points of P on the line through points p and q."""
    return line_record(P, S, p, q).multiplicity


def is_c_ordinary_triangle(
    P: PointSet, S: SpannedLineSet, i: int, j: int, k: int, c: int
) -> Optional[TriangleCertificate]:
    if len({i, j, k}) != 3:
        raise DuplicateIndices(f"indices must be pairwise distinct: {(i, j, k)}")
    i, j, k = sorted((i, j, k))
    rij = line_record(P, S, i, j)
    if k in rij:
        return None
    sides = (rij.multiplicity, line_multiplicity(P, S, i, k), line_multiplicity(P, S, j, k))
    if max(sides) > c:
        return None
    return TriangleCertificate((i, j, k), c, sides)


class PairTable:
    """Dense per-pair line ids and multiplicities for triangle search."""

    def __init__(self, n: int, S: SpannedLineSet):
        self.n = n
        self.line_id = np.full((n, n), -1, dtype=np.int64)
        self.mult = np.zeros((n, n), dtype=np.int64)
        for lid, record in enumerate(S):
            idx = np.asarray(record.incident)
            self.line_id[np.ix_(idx, idx)] = lid
            self.mult[np.ix_(idx, idx)] = record.multiplicity
        np.fill_diagonal(self.line_id, -1)
        np.fill_diagonal(self.mult, 0)


def find_c_ordinary_triangle(
    P: PointSet, S: SpannedLineSet, c: int, table: Optional[PairTable] = None
) -> Optional[TriangleCertificate]:
    """Lexicographically smallest c-ordinary triangle by index, or None."""
    n = len(P)
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    table = table or PairTable(n, S)
    ok = (table.mult <= c) & (table.line_id >= 0)
    lid = table.line_id
    for i in range(n - 2):
        row = ok[i]
        for j in np.flatnonzero(row[i + 1:]) + i + 1:
            ks = row & ok[j] & (lid[i] != lid[i, j])
            ks[: j + 1] = False
            hits = np.flatnonzero(ks)
            if len(hits):
                k = int(hits[0])
                j = int(j)
                return TriangleCertificate(
                    (i, j, k), c, (int(table.mult[i, j]), int(table.mult[i, k]), int(table.mult[j, k]))
                )
    return None


def find_two_ordinary_line(P: PointSet, S: SpannedLineSet) -> CanonicalLine:
    """First spanned line, in canonical order, holding exactly two points."""
    if S.line_count == 1:
        raise CollinearSet("all points lie on one line")
    for record in S:
        if record.multiplicity == 2:
            return record.line
    raise InternalError("non-collinear set without a 2-point line; incidence engine is broken")


def restricted_set(
    P: PointSet, S: SpannedLineSet, L: SpannedLineRecord, anchor: int, c: int
) -> RestrictedSet:
    """Points of L whose line to ``anchor`` holds more than c points."""
    if anchor in L:
        raise AnchorOnLine(f"anchor {anchor} lies on {L.line}")
    members = tuple(p for p in L.incident if line_multiplicity(P, S, p, anchor) > c)
    return RestrictedSet(anchor, members)


def rich_line(S: SpannedLineSet, n: int, c: int) -> Optional[SpannedLineRecord]:
    """Richest line with at least λn points (first in canonical order on ties)."""
    lam = lambda_of(c)
    best = None
    for record in S:
        if record.multiplicity >= lam * n and (best is None or record.multiplicity > best.multiplicity):
            best = record
    return best


@dataclass(frozen=True)
class Case1Trace:
    """Every intermediate quantity of one run of the rich-line procedure."""

    line: SpannedLineRecord
    q: int
    r: int
    P_q: RestrictedSet
    P_r: RestrictedSet
    survivors: tuple[int, ...]
    certificate: Optional[TriangleCertificate]

    @property
    def survivor_bound_met(self) -> bool:
        # survivors >= l_i / 5
        return 5 * len(self.survivors) >= self.line.multiplicity


def case1_trace(P: PointSet, S: SpannedLineSet, c: int) -> Case1Trace:
    n = len(P)
    L = rich_line(S, n, c)
    if L is None:
        raise NoRichLine(f"no line holds at least {lambda_of(c)} * {n} points")
    off = [i for i in range(n) if i not in L]
    if len(off) < 2:
        raise Unsatisfied("at most one point off the rich line; P lies on two lines")
    sub = P.subset(off)
    sub_lines = spanned_lines(sub)
    try:
        qr = find_two_ordinary_line(sub, sub_lines)
    except CollinearSet:
        raise Unsatisfied("points off the rich line are collinear; P lies on two lines") from None
    local = sub_lines.get(qr).incident
    q, r = off[local[0]], off[local[1]]
    P_q = restricted_set(P, S, L, q, c)
    P_r = restricted_set(P, S, L, r, c)
    excluded = set(P_q.members) | set(P_r.members)
    survivors = tuple(
        s for s in L.incident if s not in excluded and not qr.contains(P[s])
    )
    certificate = None
    # qr may pick up one point of L in P; with c < 3 that side is too rich
    if survivors and line_multiplicity(P, S, q, r) <= c:
        certificate = is_c_ordinary_triangle(P, S, q, r, survivors[0], c)
        if certificate is None:
            raise InternalError(f"surviving point {survivors[0]} failed validation")
    return Case1Trace(L, q, r, P_q, P_r, survivors, certificate)


def case1_find(P: PointSet, S: SpannedLineSet, c: int) -> Optional[TriangleCertificate]:
    return case1_trace(P, S, c).certificate


def neighborhood_set(P: PointSet, S: SpannedLineSet, q: int, c: int) -> list[int]:
    """Indices p != q whose line to q holds at most c points."""
    out = []
    for record in S:
        if q in record and record.multiplicity <= c:
            out.extend(p for p in record.incident if p != q)
    return sorted(out)


def find_triangle(
    P: PointSet, S: SpannedLineSet, c: int, method: str = "auto"
) -> tuple[Optional[TriangleCertificate], str]:
    """Dispatch to a finder; returns the certificate and the method used.

    ``auto`` follows the proof's case split: the rich-line procedure when a
    λn-rich line exists, brute force otherwise.
    """
    if method == "brute":
        return find_c_ordinary_triangle(P, S, c), "brute"
    if method == "case1":
        return case1_find(P, S, c), "case1"
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if rich_line(S, len(P), c) is not None:
        try:
            cert = case1_find(P, S, c)
        except Unsatisfied:
            cert = None
        if cert is not None:
            return cert, "case1"
    return find_c_ordinary_triangle(P, S, c), "brute"
