"""Independent brute-force references.

Nothing here imports the engine: points are plain (Fraction, Fraction)
tuples and collinearity is the raw determinant.
"""
from __future__ import annotations

import itertools
from decimal import Decimal, getcontext
from fractions import Fraction


def det(p, q, r):
    (px, py), (qx, qy), (rx, ry) = p, q, r
    return (qx - px) * (ry - py) - (qy - py) * (rx - px)


def brute_lines(points):
    """Set of frozensets of indices, one per spanned line (O(n^3))."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    lines = set()
    for i, j in itertools.combinations(range(len(pts)), 2):
        lines.add(frozenset(k for k in range(len(pts)) if det(pts[i], pts[j], pts[k]) == 0))
    return lines


def brute_profile(points):
    prof = {}
    for line in brute_lines(points):
        prof[len(line)] = prof.get(len(line), 0) + 1
    return dict(sorted(prof.items()))


def brute_degrees(points):
    deg = [0] * len(points)
    for line in brute_lines(points):
        for i in line:
            deg[i] += 1
    return deg


def brute_multiplicity(points, i, j):
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    return sum(1 for k in range(len(pts)) if det(pts[i], pts[j], pts[k]) == 0)


def brute_triangles(points, c):
    """All c-ordinary triangles as sorted index triples, no pruning."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    n = len(pts)
    mult = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        m = sum(1 for k in range(n) if det(pts[i], pts[j], pts[k]) == 0)
        mult[i][j] = mult[j][i] = m
    out = []
    for i, j, k in itertools.combinations(range(n), 3):
        if det(pts[i], pts[j], pts[k]) == 0:
            continue
        if mult[i][j] <= c and mult[i][k] <= c and mult[j][k] <= c:
            out.append((i, j, k))
    return out


def decimal_final_bound(n, digits=70):
    getcontext().prec = digits
    three = Decimal(3)
    return three * (Decimal(6).sqrt() + 1) / (1 - three * (three / Decimal(n)).sqrt())


def decimal_regime_bound(n, B, digits=70):
    getcontext().prec = digits
    B = Decimal(B)
    return (6 * B + B * B) / (2 - 3 * B * (Decimal(2) / Decimal(n)).sqrt())
