"""Known incidence theorems used as exact oracles against the engine.

Every check is a pure function of an :class:`IncidenceSummary` (plus the
spanned lines for the rich-line count).  A verdict with ``applicable`` and
not ``holds`` means the incidence engine produced impossible numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .errors import CollinearInput, InvalidK
from .incidence import IncidenceSummary

LEMMAS = ("langer", "weak_dirac", "beck", "rich_lines")


@dataclass(frozen=True)
class LemmaVerdict:
    lemma: str
    applicable: bool
    holds: bool
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.holds or not self.applicable

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "applicable": self.applicable,
            "holds": self.holds,
            "witness": self.witness,
        }


def _light_lines(summary: IncidenceSummary) -> bool:
    # no line holds more than 2n/3 points
    return 3 * summary.max_multiplicity <= 2 * summary.n


def langer_check(summary: IncidenceSummary) -> LemmaVerdict:
    """Incidences are at least n(n+3)/3 when no line holds over 2n/3 points."""
    n = summary.n
    bound = Fraction(n * (n + 3), 3)
    return LemmaVerdict(
        "langer",
        applicable=n >= 3 and _light_lines(summary),
        holds=summary.incidences >= bound,
        witness={
            "n": n,
            "incidences": summary.incidences,
            "bound": str(bound),
            "max_multiplicity": summary.max_multiplicity,
        },
    )


def weak_dirac_check(summary: IncidenceSummary) -> LemmaVerdict:
    """Some point lies on at least n/3 + 1 spanned lines."""
    n = summary.n
    if summary.line_count <= 1:
        raise CollinearInput("weak Dirac bound needs a non-collinear set")
    best = max(summary.degree, key=lambda i: (summary.degree[i], -i))
    bound = Fraction(n, 3) + 1
    return LemmaVerdict(
        "weak_dirac",
        applicable=n >= 3,
        holds=summary.degree[best] >= bound,
        witness={"point": best, "degree": summary.degree[best], "bound": str(bound)},
    )


def exceeds_gamma_fraction(count: int, n: int) -> bool:
    """Exact test of count > (6 + sqrt 3)/9 * n.

    Equivalent to 9*count - 6n > sqrt(3) * n; the right side is
    non-negative, so the left must be positive before both are squared.
    """
    lhs = 9 * count - 6 * n
    return lhs > 0 and lhs * lhs > 3 * n * n


def beck_check(summary: IncidenceSummary) -> LemmaVerdict:
    """A line with more than γn points, or at least n²/9 spanned lines."""
    n = summary.n
    rich = exceeds_gamma_fraction(summary.max_multiplicity, n)
    many = 9 * summary.line_count >= n * n
    return LemmaVerdict(
        "beck",
        applicable=n >= 2,
        holds=rich or many,
        witness={
            "n": n,
            "max_multiplicity": summary.max_multiplicity,
            "rich_line_branch": rich,
            "line_count": summary.line_count,
            "many_lines_branch": many,
        },
    )


def rich_lines_check(summary: IncidenceSummary, k: int) -> LemmaVerdict:
    """At most 4/(k-1)^2 of the spanned lines hold more than k points."""
    if k < 2:
        raise InvalidK(f"k must be at least 2, got {k}")
    rich = sum(count for mult, count in summary.profile.items() if mult > k)
    bound = Fraction(4 * summary.line_count, (k - 1) ** 2)
    return LemmaVerdict(
        "rich_lines",
        applicable=_light_lines(summary),
        holds=rich <= bound,
        witness={
            "k": k,
            "lines_above_k": rich,
            "line_count": summary.line_count,
            "bound": str(bound),
            "max_multiplicity": summary.max_multiplicity,
        },
    )


def verify_all(summary: IncidenceSummary, ks: Iterable[int] = range(2, 13)) -> list[LemmaVerdict]:
    """Run every oracle; weak Dirac is skipped on collinear input."""
    verdicts = [langer_check(summary)]
    if summary.line_count > 1 and summary.n >= 3:
        verdicts.append(weak_dirac_check(summary))
    verdicts.append(beck_check(summary))
    verdicts.extend(rich_lines_check(summary, k) for k in ks)
    return verdicts


def recheck(verdict: LemmaVerdict) -> bool:
    """Recompute ``holds`` from the witness alone."""
    w = verdict.witness
    if verdict.lemma == "langer":
        return w["incidences"] >= Fraction(w["bound"])
    if verdict.lemma == "weak_dirac":
        return w["degree"] >= Fraction(w["bound"])
    if verdict.lemma == "beck":
        return exceeds_gamma_fraction(w["max_multiplicity"], w["n"]) or 9 * w["line_count"] >= w["n"] ** 2
    if verdict.lemma == "rich_lines":
        return w["lines_above_k"] * (w["k"] - 1) ** 2 <= 4 * w["line_count"]
    raise ValueError(f"unknown lemma {verdict.lemma!r}")
