"""Totally isotropic Kalman varieties and symmetric-tuple codimension formulas.

When every entry of the singular vector tuple is forced onto the isotropic
quadric of its factor, the resulting variety is the dual variety of the
Segre-Veronese embedding of the product of quadrics.  Its degree is the
alternating polar-class sum

    2^k * sum_{j=0}^{N} (-1)^j (N+1-j)! *
          sum_{|alpha|=j} [ prod_l omega_l^(n_l-2-alpha_l) / (n_l-2-alpha_l)! ]
                          * sum_{beta <= alpha} prod_l C(n_l, beta_l) (-2)^(alpha_l-beta_l)

with N = sum_l n_l - 2k, where any factor with n_l - 2 - alpha_l < 0 kills the
term (so alpha ranges over compositions bounded by n_l - 2).  The hypersurface
is irreducible unless some n_l = 2, in which case it splits into 2^|J|
components, J = {l : n_l = 2}.

Intermediate arithmetic is exact rational; the result is asserted integral,
never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .degrees import TensorFormat


@dataclass(frozen=True)
class IsotropicResult:
    degree: int
    components: int
    ambient_dim: int  # dimension N of the embedded product of quadrics


def _bounded_compositions(total: int, bounds: list[int]) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors with given sum, bounded componentwise."""
    if not bounds:
        if total == 0:
            yield ()
        return
    head_max = min(total, bounds[0])
    tail_room = sum(bounds[1:])
    for a in range(max(0, total - tail_room), head_max + 1):
        for rest in _bounded_compositions(total - a, bounds[1:]):
            yield (a,) + rest


def isotropic_degree(fmt: TensorFormat) -> IsotropicResult:
    """Degree and component count of the totally isotropic variety for ``fmt``."""
    if any(ni < 2 for ni in fmt.n):
        raise ValueError("all dimensions n_i must be >= 2 (each factor needs a smooth quadric)")
    k = fmt.k
    n_dim = sum(fmt.n) - 2 * k
    bounds = [ni - 2 for ni in fmt.n]

    # Per-factor inner sums s_l(a) = sum_{b<=a} C(n_l, b) (-2)^(a-b); the full
    # beta sum over the box beta <= alpha factorizes into their product.
    inner = [
        [sum(comb(ni, b) * (-2) ** (a - b) for b in range(a + 1)) for a in range(bound + 1)]
        for ni, bound in zip(fmt.n, bounds)
    ]

    total = Fraction(0)
    for j in range(n_dim + 1):
        layer = Fraction(0)
        for alpha in _bounded_compositions(j, bounds):
            term = Fraction(1)
            for l, a in enumerate(alpha):
                e = fmt.n[l] - 2 - a
                term *= Fraction(fmt.omega[l] ** e, factorial(e))
                term *= inner[l][a]
            layer += term
        total += (-1) ** j * factorial(n_dim + 1 - j) * layer
    total *= 2**k

    if total.denominator != 1:
        raise ArithmeticError(f"polar-class sum is not integral: {total}")
    degree = int(total)
    if degree <= 0:
        raise ArithmeticError(f"polar-class sum is not positive: {degree}")
    components = 2 ** sum(1 for ni in fmt.n if ni == 2)
    return IsotropicResult(degree=degree, components=components, ambient_dim=n_dim)


def isotropic_degree_symmetric(n: int, omega: int) -> int:
    """Closed form for a single symmetric factor: 2 * sum_{j<=n-2} (j+1)(omega-1)^j."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if omega < 1:
        raise ValueError("omega must be >= 1")
    return 2 * sum((j + 1) * (omega - 1) ** j for j in range(n - 1))


def symmetric_tuple_codim(n: int, k: int) -> int:
    """Codimension of the variety of tensors with a fully repeated singular tuple."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    return (k - 1) * (n - 1)


def partition_tuple_codim(n: int, k: int, t: int) -> int:
    """Codimension for a singular tuple repeating along a partition of k into t parts.

    Depends only on the number of parts t, not on the partition itself.
    """
    if not 1 <= t <= k:
        raise ValueError("the number of parts t must satisfy 1 <= t <= k")
    if n < 1:
        raise ValueError("n must be >= 1")
    return (k - t) * (n - 1)


# Codimension and degree of the square-matrix repeated-singular-pair varieties
# for n = 2..6.  No general degree formula is known; these values are shipped
# as documented reference data only and are never computed here.
SYMMETRIC_PAIR_TABLE: dict[int, tuple[int, int]] = {
    2: (1, 1),
    3: (2, 7),
    4: (3, 24),
    5: (4, 86),
    6: (5, 314),
}
