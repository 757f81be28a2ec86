"""Exception hierarchy shared by every module."""


class OrdtriError(Exception):
    """Base class for all errors raised by this package."""


class GeometryError(OrdtriError):
    pass


class IdenticalPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    pass


class PointFormatError(OrdtriError):
    """Malformed point-set text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class TooFewPoints(OrdtriError):
    pass


class EmptySet(OrdtriError):
    pass


class SamePoint(OrdtriError):
    pass


class DuplicateIndices(OrdtriError):
    pass


class CollinearSet(OrdtriError):
    pass


class InternalError(OrdtriError):
    pass


class AnchorOnLine(OrdtriError):
    pass


class NoRichLine(OrdtriError):
    pass


class Unsatisfied(OrdtriError):
    pass


class LineHitsPointSet(OrdtriError):
    pass


class ParallelSpannedLine(OrdtriError):
    def __init__(self, blocker, spanned):
        super().__init__(f"blocker line {blocker} is parallel to spanned line {spanned}")
        self.blocker = blocker
        self.spanned = spanned


class DuplicateBlockerLines(OrdtriError):
    pass


class InvalidParameters(OrdtriError):
    pass


class CollinearInput(OrdtriError):
    pass


class InvalidK(OrdtriError):
    pass


class DegenerateDenominator(OrdtriError):
    pass


class Unreachable(OrdtriError):
    pass
