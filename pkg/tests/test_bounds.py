from decimal import Decimal

import mpmath
import pytest
from mpmath import mpf

from oracles import decimal_final_bound, decimal_regime_bound
from ordtri.bounds import (
    bound_report,
    case2_bound,
    final_bound,
    final_bound_below,
    limit_constant,
    regime_bound,
    threshold_n,
)
from ordtri.errors import DegenerateDenominator, Unreachable


def close(a, b, digits):
    return abs(Decimal(mpmath.nstr(a, 60)) - Decimal(b)) < Decimal(10) ** -digits


def test_final_bound_crossing():
    # Decimal oracle at 70 digits: 10.99996634... and 11.00001133...
    assert close(final_bound(7697), decimal_final_bound(7697), 45)
    assert close(final_bound(7696), decimal_final_bound(7696), 45)
    assert final_bound(7697) < 11 < final_bound(7696)
    assert final_bound_below(7697, 11)
    assert not final_bound_below(7696, 11)


def test_final_bound_domain():
    with pytest.raises(DegenerateDenominator):
        final_bound(27)
    assert final_bound(28) > 100


def test_final_bound_decreasing():
    values = [final_bound(n) for n in [28, 29, 50, 100, 1000, 7696, 7697, 10**6, 10**12]]
    assert values == sorted(values, reverse=True)
    assert all(v > limit_constant() for v in values)


def test_exact_predicate_agrees_with_high_precision():
    for c in range(11, 40):
        for n in list(range(28, 400)) + [7696, 7697, 7698, 10**5]:
            assert final_bound_below(n, c) == (final_bound(n) < c)


def test_threshold_examples():
    assert threshold_n(11) == 7697
    assert threshold_n(12) < threshold_n(11)
    with pytest.raises(Unreachable):
        threshold_n(10)


@pytest.mark.parametrize("c", range(11, 101))
def test_threshold_consistency(c):
    t = threshold_n(c)
    assert final_bound(t) < c
    if t - 1 > 27:
        assert c <= final_bound(t - 1)


def test_case2_bound():
    n = 7697
    l = -(-n // 3)
    L = n * n // 6
    value = case2_bound(n, l, L)
    assert l == 2566 and value > 0
    with mpmath.workdps(50):
        expected = (6 * mpmath.sqrt(L) + n) / (l - 3 * mpmath.sqrt(l))
    assert abs(value - expected) < mpf(10) ** -45
    with pytest.raises(DegenerateDenominator):
        case2_bound(n, 9, L)
    # doubling |L| scales only the 6 sqrt|L| term, by sqrt 2
    with mpmath.workdps(50):
        den = l - 3 * mpmath.sqrt(l)
        lhs = case2_bound(n, l, 2 * L) * den - n
        rhs = (case2_bound(n, l, L) * den - n) * mpmath.sqrt(2)
        assert abs(lhs - rhs) < mpf(10) ** -40


def test_regime_bound_values():
    n = 10**6
    with mpmath.workdps(60):
        r2 = regime_bound(n, mpmath.sqrt(2), dps=60)
    # Decimal oracle: 5.2584159349240573...
    assert close(r2, decimal_regime_bound(n, Decimal(2).sqrt()), 40)
    assert regime_bound(n, mpmath.sqrt(2)) < regime_bound(n, 2) < regime_bound(n, "2.4")


def test_regime_bound_limit_identity():
    n = 10**6
    with mpmath.workdps(80):
        B = mpmath.sqrt(6) - mpf(10) ** -20
        near = regime_bound(n, B, dps=80)
        assert abs(near - final_bound(n, dps=80)) < mpf(10) ** -15
        # at B = sqrt 6 the two closed forms coincide algebraically
        B = mpmath.sqrt(6)
        at = (6 * B + B * B) / (2 - 3 * B * mpmath.sqrt(mpf(2) / n))
        assert abs(at - final_bound(n, dps=80)) < mpf(10) ** -30


def test_regime_bound_monotone_and_domain():
    n = 10**6
    with mpmath.workdps(50):
        Bs = [mpmath.sqrt(2) + k * (mpmath.sqrt(6) - mpmath.sqrt(2)) / 20 for k in range(20)]
    values = [regime_bound(n, B) for B in Bs]
    assert values == sorted(values)
    with pytest.raises(ValueError):
        regime_bound(n, 1)
    with pytest.raises(DegenerateDenominator):
        regime_bound(2, "1.5")


def test_report_regimes():
    r = bound_report(7697, c=11)
    assert r.regime == "small_L" and r.triangle_forced is True
    assert bound_report(7696, c=11).triangle_forced is False
    n = 10**4
    r = bound_report(n, c=11, l=n // 3 + 1, line_count=n * n // 4)
    assert r.regime == "large_L"
    assert r.case2_bound is not None
    with mpmath.workdps(50):
        assert abs(r.inputs.B - 2) < mpf(10) ** -40
    doc = r.to_json()
    assert doc["inputs"]["lambda"] == "5/24"
    assert len(doc["final_bound"].replace(".", "")) >= 50
