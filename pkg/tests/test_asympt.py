import math
from fractions import Fraction

import pytest

from kalmandeg.asympt import (
    AsymptoticEstimate,
    asymptotic_degree,
    compare_exact_asymptotic,
    critical_constants,
    ratio_to_exact,
    verify_critical_point,
)
from kalmandeg.genfun import split_H
from kalmandeg.polycore import TPoly, poly_mul

VALID_GRID = [(k, w) for k in range(2, 6) for w in range(1, 4) if w * k >= 3]


def test_constant_spot_values():
    cc = critical_constants(3, 1, 0)
    assert cc.c == Fraction(1, 2)
    assert cc.l0 == Fraction(4, 3)
    assert cc.det_hessian == Fraction(1, 3)
    cc = critical_constants(2, 2, 0)
    # slope carries a factor omega (module docstring has the derivation)
    assert cc.minus_ck_dk == Fraction(8, 27)


def test_denominators_never_vanish_on_grid():
    for k, w in VALID_GRID:
        for d in range(4):
            cc = critical_constants(k, w, d)
            assert cc.c > 0 and cc.det_hessian > 0 and cc.l0 > 0 and cc.minus_ck_dk > 0


def test_amplitude_consistent_with_numerator_over_slope():
    # l0 must equal F_N(c) / slope^(delta+1) with F_N evaluated symbolically
    for k, w in VALID_GRID:
        h1, _ = split_H((w,) * k)
        ring = h1.vars
        c = Fraction(1, w * k - 1)
        point = {name: c for name in ring}
        h1_at_c = Fraction(h1.evaluate(point))
        for delta in range(3):
            f_n_at_c = h1_at_c**delta * c**k * (1 - c) ** (delta * k)
            cc = critical_constants(k, w, delta)
            assert cc.l0 == f_n_at_c / cc.minus_ck_dk ** (delta + 1), (k, w, delta)


def test_verify_critical_point_grid():
    for k, w in VALID_GRID:
        report = verify_critical_point(k, w)
        assert report.f_d_at_c == 0
        assert report.slope_product == report.expected_slope_product
        assert report.ok, (k, w)


def test_verify_rejects_degenerate_regime():
    with pytest.raises(ValueError):
        verify_critical_point(2, 1)
    with pytest.raises(ValueError):
        asymptotic_degree(2, 1, 0, 5)


def test_f_d_vanishes_at_critical_point():
    for k, w in VALID_GRID:
        _, h2 = split_H((w,) * k)
        ring = h2.vars
        f_d = h2
        for name in ring:
            f_d = poly_mul(f_d, TPoly.one(ring) - TPoly.variable(ring, name))
        c = Fraction(1, w * k - 1)
        assert f_d.evaluate({name: c for name in ring}) == 0


def test_estimate_matches_closed_constants():
    est = asymptotic_degree(3, 1, 0, 10)
    assert est.value_if_representable == pytest.approx(2 / (math.sqrt(3) * math.pi) * 8**10 / 10, rel=1e-12)
    est = asymptotic_degree(4, 1, 0, 5)
    assert est.value_if_representable == pytest.approx(
        27 / (2**9 * math.pi * math.sqrt(math.pi)) * 81**5 * 5**-1.5, rel=1e-12
    )


def test_estimate_monotone_in_n():
    for k, w in VALID_GRID:
        values = [asymptotic_degree(k, w, 0, n).log10_value for n in range(1, 12)]
        assert all(b > a for a, b in zip(values, values[1:])), (k, w)


def test_huge_estimates_drop_float_payload():
    est = asymptotic_degree(3, 1, 0, 500)
    assert est.value_if_representable is None
    assert est.log10_value > 400  # ~ 1500 log10(2), far beyond float range


def test_ratio_handles_huge_exact_values():
    est = AsymptoticEstimate(log10_value=400.0, value_if_representable=None)
    assert ratio_to_exact(est, 10**400) == pytest.approx(1.0, rel=1e-9)


def test_ratio_trend_primary_regime():
    rows = compare_exact_asymptotic(3, 1, 0, [6, 12])
    assert abs(rows[1].ratio - 1) < abs(rows[0].ratio - 1)


def test_ratio_trend_symmetric_weights():
    rows = compare_exact_asymptotic(2, 2, 0, [10, 20])
    assert abs(rows[1].ratio - 1) < abs(rows[0].ratio - 1)
    assert rows[1].ratio == pytest.approx(1.0, abs=0.05)


def test_ratio_trend_positive_codimension():
    rows = compare_exact_asymptotic(2, 2, 2, [12, 24])
    assert abs(rows[1].ratio - 1) < abs(rows[0].ratio - 1)


def test_compare_table_shape():
    assert compare_exact_asymptotic(3, 1, 0, []) == []
    rows = compare_exact_asymptotic(2, 2, 0, [3, 4, 5])
    assert [r.n for r in rows] == [3, 4, 5]
    assert all(r.exact > 0 and r.ratio > 0 for r in rows)
