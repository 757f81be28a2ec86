"""Exact analysis of c-ordinary lines and triangles in planar point sets."""

__version__ = "0.1.0"

from .geometry import CanonicalLine, Point, PointSet, collinear, intersect, line_through
from .incidence import IncidenceSummary, SpannedLineSet, covered_by_two_lines, spanned_lines, summarize

__all__ = [
    "CanonicalLine",
    "IncidenceSummary",
    "Point",
    "PointSet",
    "SpannedLineSet",
    "collinear",
    "covered_by_two_lines",
    "intersect",
    "line_through",
    "spanned_lines",
    "summarize",
]
