"""Hypercubical asymptotics of the degree factors and the critical-point constants.

In the hypercubical format n^k with all weights equal to omega, the degree
factor grows like

    d(n, delta, omega) ~ C * (1/delta!) * (k / (omega*k - 1))^delta
                           * (omega*k - 1)^(k*n) / n^((k-1)/2 - delta),

    C = (omega*k - 1)^(k-1)
        / [ (2*pi)^((k-1)/2) * sqrt(omega)
            * (omega*k)^((k-2)/2) * (omega*k - 2)^((3k-1)/2) ],

valid for k >= 3, or k = 2 with omega >= 2 (omega*k = 2 makes the constant
blow up).  The constant comes from a smooth strictly minimal critical point
c = (1/(omega*k-1), ..., 1/(omega*k-1)) of the reduced series denominator
F_D(x) = H2(x) * prod_i (1 - x_i); this module evaluates F_D and its partial
derivative at c with exact rational arithmetic to confirm the two identities
feeding the constant:

    F_D(c) = 0,
    -c_k * dF_D/dx_k (c) = omega * (omega*k)^(k-2) (omega*k - 2)^k
                                 / (omega*k - 1)^(2k-1).

The slope identity follows from dH2/dx_k evaluated on the diagonal:
(1+c)^(k-2) * [(1-omega)(1+c) - omega(k-1)c] = -omega (omega*k)^(k-2)
/ (omega*k-1)^(k-2); the test suite confirms the full constant empirically by
driving exact-over-estimate ratios to 1 across formats and codimensions.

Estimates themselves are carried in log10 space: exact degrees overflow any
float almost immediately, so ratios against big integers go through digit
counts rather than float conversion.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .degrees import CodimVec, TensorFormat, extract_degree
from .genfun import split_H
from .polycore import TPoly, poly_mul

_FLOAT_LOG10_MAX = math.log10(sys.float_info.max)


def _check_regime(k: int, omega: int) -> int:
    if k < 2 or omega < 1:
        raise ValueError("need k >= 2 and omega >= 1")
    if omega * k < 3:
        raise ValueError("need k >= 3, or k = 2 with omega >= 2 (omega*k - 2 must be positive)")
    return omega * k


@dataclass(frozen=True)
class CriticalConstants:
    """Exact rational constants attached to the critical point."""

    c: Fraction              # common coordinate of the critical point
    det_hessian: Fraction    # determinant of the rescaled phase Hessian at the origin
    l0: Fraction             # leading amplitude
    minus_ck_dk: Fraction    # -c_k * dF_D/dx_k at the critical point


def critical_constants(k: int, omega: int, delta: int) -> CriticalConstants:
    """Closed-form constants; denominators are nonzero whenever omega*k >= 3.

    The leading amplitude satisfies l0 = F_N(c) / minus_ck_dk^(delta+1) with
    F_N the reduced series numerator; the test suite checks that relation
    symbolically.
    """
    wk = _check_regime(k, omega)
    if delta < 0:
        raise ValueError("delta must be >= 0")
    return CriticalConstants(
        c=Fraction(1, wk - 1),
        det_hessian=Fraction((wk - 2) ** (k - 1), omega) / Fraction(wk) ** (k - 2),
        l0=Fraction(wk - 1) ** (k - delta - 1)
        / (Fraction(omega) ** (delta + 1) * Fraction(wk) ** (k - delta - 2) * (wk - 2) ** k),
        minus_ck_dk=omega * Fraction(wk) ** (k - 2) * (wk - 2) ** k / Fraction(wk - 1) ** (2 * k - 1),
    )


@dataclass(frozen=True)
class CriticalPointReport:
    """Exact check that the symbolic denominator matches the closed-form constants."""

    k: int
    omega: int
    f_d_at_c: Fraction
    slope_product: Fraction           # -c_k * dF_D/dx_k evaluated symbolically at c
    expected_slope_product: Fraction  # the closed form
    ok: bool


def verify_critical_point(k: int, omega: int) -> CriticalPointReport:
    """Build F_D symbolically and confirm both critical-point identities at c."""
    wk = _check_regime(k, omega)
    _, h2 = split_H((omega,) * k)
    ring = h2.vars
    f_d = h2
    for name in ring:
        f_d = poly_mul(f_d, TPoly.one(ring) - TPoly.variable(ring, name))

    c = Fraction(1, wk - 1)
    point = {name: c for name in ring}
    value = Fraction(f_d.evaluate(point))
    slope = -c * Fraction(f_d.partial(ring[-1]).evaluate(point))
    expected = critical_constants(k, omega, 0).minus_ck_dk
    return CriticalPointReport(
        k=k,
        omega=omega,
        f_d_at_c=value,
        slope_product=slope,
        expected_slope_product=expected,
        ok=(value == 0 and slope == expected),
    )


@dataclass(frozen=True)
class AsymptoticEstimate:
    log10_value: float
    value_if_representable: float | None
    ratio_to_exact: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.log10_value):
            raise ValueError("log10_value must be finite")
        if self.ratio_to_exact is not None and self.ratio_to_exact <= 0:
            raise ValueError("ratio_to_exact must be positive when present")


def asymptotic_degree(k: int, omega: int, delta: int, n: int) -> AsymptoticEstimate:
    """Leading-order estimate of the hypercubical degree factor, in log10 space."""
    wk = _check_regime(k, omega)
    if delta < 0:
        raise ValueError("delta must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    log10_c = (
        (k - 1) * math.log10(wk - 1)
        - (k - 1) / 2 * math.log10(2 * math.pi)
        - 0.5 * math.log10(omega)
        - (k - 2) / 2 * math.log10(wk)
        - (3 * k - 1) / 2 * math.log10(wk - 2)
    )
    log10_value = (
        log10_c
        + delta * (math.log10(k) - math.log10(wk - 1))
        - math.log10(math.factorial(delta))
        + k * n * math.log10(wk - 1)
        - ((k - 1) / 2 - delta) * math.log10(n)
    )
    value = 10.0**log10_value if abs(log10_value) < _FLOAT_LOG10_MAX else None
    return AsymptoticEstimate(log10_value=log10_value, value_if_representable=value)


def _log10_bigint(v: int) -> float:
    if v <= 0:
        raise ValueError("need a positive integer")
    s = str(v)
    head = s[:17]
    return math.log10(int(head)) + (len(s) - len(head))


def ratio_to_exact(estimate: AsymptoticEstimate, exact: int) -> float:
    """estimate / exact as a float, safe for exact values far beyond float range."""
    return 10.0 ** (estimate.log10_value - _log10_bigint(exact))


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    exact: int
    log10_estimate: float
    ratio: float


def compare_exact_asymptotic(
    k: int, omega: int, delta: int, n_range: Sequence[int]
) -> list[ComparisonRow]:
    """Exact degree factor (by extraction) next to the estimate for each n."""
    rows = []
    for n in n_range:
        fmt = TensorFormat((n,) * k, (omega,) * k)
        cv = CodimVec((delta,) + (0,) * (k - 1))
        exact = extract_degree(fmt, cv)
        est = asymptotic_degree(k, omega, delta, n)
        ratio = ratio_to_exact(est, exact)
        rows.append(ComparisonRow(n=n, exact=exact, log10_estimate=est.log10_value, ratio=ratio))
    return rows
