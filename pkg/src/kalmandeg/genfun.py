"""Rational generating function for the degree factors, built two independent ways.

With the codimension concentrated in the first factor, the degree factors
d(n, delta) are the coefficients of x^n y^delta in

    [ prod_i x_i / (1 - x_i) ] / H(x, y),

where the generating polynomial is

    H(x, y) = -y x_1 prod_{i>=2} (1 + x_i)
              + prod_i (1 + x_i)
              - sum_j omega_j x_j prod_{i != j} (1 + x_i).

H is also det(I - T A) for the bordered matrix A whose top-left k x k block
has entries omega_j - [i == j], last column all ones, and last row (1, 0..0),
with T = diag(x_1..x_k, y).  Both constructions are implemented and must agree
exactly; series coefficients must agree with direct extraction.

Series expansion works entirely in capped integer arithmetic: 1/D for a
denominator D with constant term 1 is the geometric series in (1 - D), which
terminates under caps because (1 - D) has no constant term.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Sequence

from .polycore import ExponentVec, PolyMatrix, TPoly, det, poly_mul


def _xy_ring(k: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(k)) + ("y",)


def _check_omega(omega: Sequence[int]) -> tuple[int, ...]:
    omega = tuple(omega)
    if len(omega) < 1:
        raise ValueError("at least one factor is required")
    if any(w < 1 for w in omega):
        raise ValueError("all weights omega_i must be >= 1")
    return omega


def _one_plus(ring: tuple[str, ...], name: str) -> TPoly:
    return TPoly.one(ring) + TPoly.variable(ring, name)


def build_H(omega: Sequence[int]) -> TPoly:
    """The generating polynomial H in the ring (x_1..x_k, y); constant term 1."""
    omega = _check_omega(omega)
    k = len(omega)
    ring = _xy_ring(k)
    prod_all = TPoly.one(ring)
    for i in range(k):
        prod_all = prod_all * _one_plus(ring, ring[i])
    h = prod_all
    for j in range(k):
        prod_others = TPoly.one(ring)
        for i in range(k):
            if i != j:
                prod_others = prod_others * _one_plus(ring, ring[i])
        h = h - omega[j] * (TPoly.variable(ring, ring[j]) * prod_others)
    tail = TPoly.monomial(ring, {ring[0]: 1, "y": 1})
    for i in range(1, k):
        tail = tail * _one_plus(ring, ring[i])
    return h - tail


def _bordered_matrix(omega: tuple[int, ...]) -> PolyMatrix:
    """I - T A over (x_1..x_k, y) for the bordered matrix A described above."""
    k = len(omega)
    ring = _xy_ring(k)
    rows: list[list[TPoly]] = []
    for i in range(k):
        row = []
        for j in range(k):
            a = omega[j] - (1 if i == j else 0)
            entry = TPoly.constant(ring, 1) if i == j else TPoly.zero(ring)
            if a:
                entry = entry - TPoly.monomial(ring, {ring[i]: 1}, a)
            row.append(entry)
        row.append(-TPoly.variable(ring, ring[i]))
        rows.append(row)
    last = [-TPoly.variable(ring, "y")] + [TPoly.zero(ring)] * (k - 1) + [TPoly.one(ring)]
    rows.append(last)
    return PolyMatrix(rows)


def build_H_via_determinant(omega: Sequence[int]) -> TPoly:
    """H computed as det(I - TA); must equal build_H exactly."""
    return det(_bordered_matrix(_check_omega(omega)))


def last_row_minors(omega: Sequence[int]) -> tuple[PolyMatrix, PolyMatrix]:
    """The two k x k minors from expanding det(I - TA) along its bottom row.

    First: drop the bottom row and first column; second: drop the bottom row
    and last column.  Their determinants have product-form closed expressions
    checked in the test suite.
    """
    m = _bordered_matrix(_check_omega(omega))
    top = m.entries[:-1]
    first = PolyMatrix([row[1:] for row in top])
    second = PolyMatrix([row[:-1] for row in top])
    return first, second


def split_H(omega: Sequence[int]) -> tuple[TPoly, TPoly]:
    """Write H = -y*H1 + H2 and return (H1, H2) over the x-ring only.

    H is multilinear in y, so the split is exact; H1 carries no weight
    dependence while H2 is the y = 0 restriction.
    """
    omega = _check_omega(omega)
    h = build_H(omega)
    h2 = h.coefficient_in("y", 0).without_vars(["y"])
    h1 = (-h.coefficient_in("y", 1)).without_vars(["y"])
    for power in range(2, max((e[-1] for e in h.terms), default=0) + 1):
        if h.coefficient_in("y", power):
            raise ArithmeticError("generating polynomial is not multilinear in y")
    return h1, h2


@dataclass(frozen=True)
class RationalSeries:
    """numerator/denominator pair expandable as an exact capped power series.

    The denominator must have constant term exactly 1, which makes 1/D the
    terminating geometric series sum_m (1-D)^m under the caps.
    """

    numerator: TPoly
    denominator: TPoly
    caps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "caps", tuple(self.caps))
        if self.numerator.vars != self.denominator.vars:
            raise ValueError("numerator and denominator live in different rings")
        if len(self.caps) != len(self.numerator.vars):
            raise ValueError("caps length does not match variable count")
        if self.denominator.constant_term != 1:
            raise ValueError("denominator must have constant term 1")

    def expand(self) -> dict[ExponentVec, int]:
        """All nonzero series coefficients with exponents within the caps."""
        ring = self.numerator.vars
        caps = self.caps
        one = TPoly.one(ring, caps)
        u = one - poly_mul(self.denominator, one, caps)  # 1 - D, no constant term
        inv = one
        power = u
        budget = sum(caps) + 1
        while power:
            inv = inv + power
            power = poly_mul(power, u, caps)
            budget -= 1
            if budget < 0:
                raise ArithmeticError("series inversion failed to terminate")
        series = poly_mul(self.numerator, inv, caps)
        return dict(series.terms)


def expand_series(
    omega: Sequence[int], caps: Sequence[int], y_cap: int
) -> dict[tuple[tuple[int, ...], int], int]:
    """Nonzero coefficients d(n, delta) for n within ``caps`` and delta <= ``y_cap``.

    Keys are (n-vector, delta); absent keys mean coefficient 0.  Every value
    equals the direct extraction at codimension vector (delta, 0, ..., 0).
    """
    omega = _check_omega(omega)
    k = len(omega)
    caps = tuple(caps)
    if len(caps) != k:
        raise ValueError("caps length does not match the number of factors")
    if any(c < 0 for c in caps) or y_cap < 0:
        raise ValueError("caps must be nonnegative")
    ring = _xy_ring(k)
    full_caps = caps + (y_cap,)
    denominator = build_H(omega)
    for i in range(k):
        one_minus = TPoly.one(ring) - TPoly.variable(ring, ring[i])
        denominator = poly_mul(denominator, one_minus, full_caps)
    numerator = TPoly.monomial(ring, {ring[i]: 1 for i in range(k)}, 1, full_caps)
    series = RationalSeries(numerator, denominator, full_caps).expand()
    return {(exps[:k], exps[k]): c for exps, c in series.items()}


def macmahon_check(a: Sequence[Sequence[int]], cap: Sequence[int] | int) -> bool:
    """Coefficient identity between products of linear forms and 1/det(I - TA).

    For every exponent vector p within ``cap``, compares the coefficient of
    z^p in prod_i (a_i1 z_1 + ... + a_im z_m)^(p_i) against the series
    coefficient of w^p in 1/det(I_m - TA), T = diag(w).  Both sides are exact;
    returns True iff they agree everywhere.
    """
    m = len(a)
    if m == 0 or any(len(row) != m for row in a):
        raise ValueError("matrix must be square and nonempty")
    caps = (cap,) * m if isinstance(cap, int) else tuple(cap)
    if len(caps) != m:
        raise ValueError("cap length does not match matrix size")
    ring = tuple(f"z{i + 1}" for i in range(m))

    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            entry = TPoly.constant(ring, 1) if i == j else TPoly.zero(ring)
            if a[i][j]:
                entry = entry - TPoly.monomial(ring, {ring[i]: 1}, a[i][j])
            row.append(entry)
        rows.append(row)
    denominator = det(PolyMatrix(rows))
    rhs = RationalSeries(TPoly.one(ring), denominator, caps).expand()

    linear_forms = [
        TPoly(ring, {tuple(1 if t == j else 0 for t in range(m)): a[i][j] for j in range(m) if a[i][j]})
        for i in range(m)
    ]
    for p in iter_product(*(range(c + 1) for c in caps)):
        lhs_poly = TPoly.one(ring, p)
        for i in range(m):
            for _ in range(p[i]):
                lhs_poly = poly_mul(lhs_poly, linear_forms[i], p)
        if lhs_poly.coefficient(p) != rhs.get(p, 0):
            return False
    return True
