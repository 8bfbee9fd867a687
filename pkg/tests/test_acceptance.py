"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every criterion carries its stated runtime bound where one exists.
"""

import random
import time
from itertools import product
from math import comb

from kalmandeg.asympt import compare_exact_asymptotic, verify_critical_point
from kalmandeg.degrees import (
    CodimVec,
    TensorFormat,
    check_stabilization,
    extract_degree,
    kalman_degree,
    symmetric_degree,
)
from kalmandeg.genfun import build_H, build_H_via_determinant, det, expand_series, last_row_minors, macmahon_check
from kalmandeg.isotropic import (
    SYMMETRIC_PAIR_TABLE,
    isotropic_degree,
    isotropic_degree_symmetric,
    partition_tuple_codim,
    symmetric_tuple_codim,
)
from kalmandeg.polycore import TPoly


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"[acceptance {num}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_reference_degree():
    start = time.perf_counter()
    fmt = TensorFormat((4, 4), (1, 1))
    factor = extract_degree(fmt, CodimVec((2, 1)))
    total = kalman_degree(fmt, CodimVec((2, 1)), (3, 2))
    elapsed = time.perf_counter() - start
    ok = factor == 20 and total == 120 and elapsed < 1.0
    _report(1, ok, f"d((4,4),(2,1),(1,1))={factor}, with degZ=(3,2): {total}, {elapsed:.3f}s")


def test_criterion_2_series_extraction_equivalence():
    start = time.perf_counter()
    mismatches = 0
    cells = 0
    sweeps = [
        (2, (4, 4), 3, [(1, 1), (2, 1), (2, 2)]),
        (3, (3, 3, 3), 2, [(1, 1, 1), (2, 1, 1), (2, 2, 2)]),
    ]
    for k, caps, y_cap, omegas in sweeps:
        for omega in omegas:
            coeffs = expand_series(omega, caps, y_cap)
            for n in product(*(range(1, c + 1) for c in caps)):
                for d in range(y_cap + 1):
                    cells += 1
                    got = coeffs.get((n, d), 0)
                    if d <= n[0] - 1:
                        want = extract_degree(TensorFormat(n, omega), CodimVec((d,) + (0,) * (k - 1)))
                    else:
                        want = 0  # numerator kills these cells; extraction domain ends here
                    if got != want:
                        mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 30.0
    _report(2, ok, f"{cells} series cells vs extraction, {mismatches} mismatches, {elapsed:.2f}s")


def test_criterion_3_worked_series_coefficients():
    coeffs = expand_series((1, 1), (3, 3), 2)
    ok = coeffs.get(((2, 2), 1)) == 2 and coeffs.get(((3, 2), 2)) == 3
    _report(3, ok, f"coeff(x1^2 x2^2 y)={coeffs.get(((2, 2), 1))}, coeff(x1^3 x2^2 y^2)={coeffs.get(((3, 2), 2))}")


def test_criterion_4_determinant_identities():
    rng = random.Random(20250809)
    ok = True
    for k in range(1, 6):
        ring = tuple(f"x{i + 1}" for i in range(k)) + ("y",)
        for _ in range(20):
            omega = tuple(rng.randint(1, 4) for _ in range(k))
            if build_H(omega) != build_H_via_determinant(omega):
                ok = False
            first, second = last_row_minors(omega)
            tail = TPoly.one(ring)
            for i in range(1, k):
                tail = tail * (TPoly.one(ring) + TPoly.variable(ring, ring[i]))
            want_first = (TPoly.variable(ring, "x1") * tail).scaled((-1) ** k)
            want_second = TPoly.one(ring)
            for i in range(k):
                want_second = want_second * (TPoly.one(ring) + TPoly.variable(ring, ring[i]))
            for j in range(k):
                others = TPoly.one(ring)
                for i in range(k):
                    if i != j:
                        others = others * (TPoly.one(ring) + TPoly.variable(ring, ring[i]))
                want_second = want_second - omega[j] * (TPoly.variable(ring, ring[j]) * others)
            if det(first) != want_first or det(second) != want_second:
                ok = False
    _report(4, ok, "H = det route and both minor determinant identities, k <= 5, 20 draws each")


def test_criterion_5_closed_form_specializations():
    ok = True
    for n in range(1, 9):
        for w in range(1, 5):
            for d in range(n):
                if symmetric_degree(n, d, w) != extract_degree(TensorFormat((n,), (w,)), CodimVec((d,))):
                    ok = False
    for n in range(2, 9):
        for w in range(1, 5):
            if isotropic_degree(TensorFormat((n,), (w,))).degree != isotropic_degree_symmetric(n, w):
                ok = False
    res_a = isotropic_degree(TensorFormat((3,), (2,)))
    res_b = isotropic_degree(TensorFormat((2, 2), (1, 1)))
    ok = ok and (res_a.degree, res_a.components) == (6, 1) and (res_b.degree, res_b.components) == (4, 4)
    _report(5, ok, f"symmetric & isotropic closed forms match extraction/summation; "
                   f"iso((3),(2))={res_a.degree}, iso((2,2),(1,1))=({res_b.degree},{res_b.components} comps)")


def test_criterion_6_matrix_and_binary_ed():
    ok = all(
        extract_degree(TensorFormat((n1, n2), (1, 1)), CodimVec((0, 0))) == min(n1, n2)
        for n1 in range(1, 7)
        for n2 in range(1, 7)
    )
    cube = extract_degree(TensorFormat((2, 2, 2), (1, 1, 1)), CodimVec((0, 0, 0)))
    ok = ok and cube == 6
    _report(6, ok, f"matrix grid equals min(n1,n2) up to 6, d((2,2,2),0)={cube}")


def test_criterion_7_stabilization_and_binary_discrepancy():
    ok = True
    probed = [
        (TensorFormat((2, 2), (1, 1)), CodimVec((0, 0)), 0),
        (TensorFormat((3, 2), (1, 1)), CodimVec((1, 0)), 0),
        (TensorFormat((3, 3), (1, 1)), CodimVec((0, 0)), 0),
        (TensorFormat((4, 2, 2), (1, 1, 1)), CodimVec((1, 0, 0)), 0),
        (TensorFormat((3, 2, 2), (1, 1, 1)), CodimVec((0, 0, 0)), 0),
        (TensorFormat((4, 3, 2), (1, 1, 1)), CodimVec((0, 0, 0)), 0),
    ]
    for fmt, cv, i in probed:
        # formats are pinned at the exact threshold for the growing index
        assert fmt.n[i] - 1 == sum(nj - 1 for j, nj in enumerate(fmt.n) if j != i) + cv.delta[i]
        report = check_stabilization(fmt, cv, i, 3)
        if not report.stable:
            ok = False
    # shorthand binomial form undercounts the binary multinomial coefficient
    extracted = extract_degree(TensorFormat((2, 2, 2), (1, 1, 1)), CodimVec((1, 0, 0)))
    shorthand = comb(3, 1) * 1
    ok = ok and extracted == 6 and shorthand == 3 and extracted != shorthand
    _report(7, ok, f"stable over 3 probes at threshold; binary k=3 delta=(1,0,0): extraction {extracted} != shorthand {shorthand}")


def test_criterion_8_macmahon_random_matrices():
    start = time.perf_counter()
    rng = random.Random(424242)
    failures = 0
    for trial in range(50):
        m = trial % 3 + 1
        a = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(m)]
        if not macmahon_check(a, (3,) * m):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 10.0
    _report(8, ok, f"50 random matrices sizes 1-3, {failures} failures, {elapsed:.2f}s")


def test_criterion_9_critical_point_and_ratio_trend():
    ok = True
    for k in range(2, 6):
        for w in range(1, 4):
            if w * k >= 3 and not verify_critical_point(k, w).ok:
                ok = False
    rows = compare_exact_asymptotic(3, 1, 0, [6, 12])
    trend = abs(rows[1].ratio - 1) < abs(rows[0].ratio - 1)
    ok = ok and trend
    _report(9, ok, f"critical-point identities exact on grid; |ratio(12)-1|={abs(rows[1].ratio-1):.4f} "
                   f"< |ratio(6)-1|={abs(rows[0].ratio-1):.4f}")


def test_criterion_10_codimension_formulas():
    ok = symmetric_tuple_codim(3, 2) == 2
    ok = ok and [symmetric_tuple_codim(n, 2) for n in range(2, 7)] == [1, 2, 3, 4, 5]
    ok = ok and [SYMMETRIC_PAIR_TABLE[n][0] for n in range(2, 7)] == [1, 2, 3, 4, 5]
    ok = ok and partition_tuple_codim(2, 3, 2) == 1
    ok = ok and partition_tuple_codim(2, 4, 2) == 2
    ok = ok and all(partition_tuple_codim(2, k, k) == 0 for k in range(1, 6))
    _report(10, ok, "repeated-tuple codimension formulas and reference-table column reproduced")
