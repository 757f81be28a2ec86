import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, sqrt

from conftest import point_sets
from ordtri.constructions import near_pencil, random_rational, two_line_config
from ordtri.errors import CollinearInput, InvalidK
from ordtri.geometry import PointSet
from ordtri.incidence import analyze
from ordtri.lemmas import (
    beck_check,
    exceeds_gamma_fraction,
    langer_check,
    recheck,
    rich_lines_check,
    verify_all,
    weak_dirac_check,
)


def summary_of(P):
    return analyze(P)[1]


def test_langer(grid3, triangle):
    v = langer_check(summary_of(grid3))
    assert v.applicable and v.holds
    assert v.witness["incidences"] == 48 and v.witness["bound"] == "36"
    v = langer_check(summary_of(near_pencil(10)))
    assert not v.applicable
    v = langer_check(summary_of(triangle))
    assert v.applicable and v.holds and v.witness["bound"] == "6"


def test_weak_dirac(grid3, triangle):
    v = weak_dirac_check(summary_of(grid3))
    assert v.holds and v.witness["degree"] >= 4
    assert weak_dirac_check(summary_of(triangle)).holds
    s = summary_of(random_rational(50, seed=11, bound=10**6, max_den=1))
    assert set(s.degree.values()) == {49}
    assert weak_dirac_check(s).holds
    with pytest.raises(CollinearInput):
        weak_dirac_check(summary_of(PointSet([(0, 0), (1, 1), (2, 2)])))


def test_beck(grid3):
    v = beck_check(summary_of(grid3))
    assert v.holds and v.witness["many_lines_branch"] and not v.witness["rich_line_branch"]
    v = beck_check(summary_of(near_pencil(100)))
    assert v.holds and v.witness["rich_line_branch"]
    assert beck_check(summary_of(PointSet([(0, 0), (1, 1)]))).holds


def test_gamma_comparison_matches_high_precision():
    with mp.workdps(50):
        gamma = (6 + sqrt(3)) / 9
        for n in range(1, 150):
            for count in range(n + 1):
                assert exceeds_gamma_fraction(count, n) == (count > gamma * n)


def test_rich_lines(grid3):
    s = summary_of(grid3)
    v = rich_lines_check(s, 2)
    assert v.applicable and v.holds and v.witness["lines_above_k"] == 8 and v.witness["bound"] == "80"
    v = rich_lines_check(s, 3)
    assert v.holds and v.witness["lines_above_k"] == 0
    # two_line_config(4, 4, (5, 7)): n = 9, profile {2: 24, 4: 2}
    s = summary_of(two_line_config(4, 4, [(5, 7)]))
    assert s.profile == {2: 24, 4: 2}
    for k, above in [(2, 2), (3, 2), (4, 0)]:
        v = rich_lines_check(s, k)
        assert v.applicable and v.holds and v.witness["lines_above_k"] == above
    with pytest.raises(InvalidK):
        rich_lines_check(s, 1)


@settings(max_examples=150, deadline=None)
@given(point_sets(3, 12))
def test_oracles_hold_and_witnesses_recheck(P):
    s = summary_of(P)
    for v in verify_all(s):
        assert v.ok, v
        assert recheck(v) == v.holds


@pytest.mark.parametrize("n", [3, 5, 8, 20])
def test_near_pencil_verdicts(n):
    for v in verify_all(summary_of(near_pencil(n))):
        assert v.ok
