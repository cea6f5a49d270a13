"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Every comparison is exact (tolerance 0) unless a check is
inherently numeric, in which case the stated tolerance is pinned in the
library itself.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from weilcensus.algebra import IntPolynomial
from weilcensus.catalog import ELLIPTIC_CURVES, GENUS2_CURVES, synthetic_census
from weilcensus.census import (
    DihedralCensusInput,
    asymptotic_ratio_probe,
    census_ell_adic,
    census_mod_ell,
    census_series,
    cover_count,
    deformation_dimension,
)
from weilcensus.curves import brute_force_count, zeta_data, zeta_from_counts
from weilcensus.modpoly import ModPoly
from weilcensus.recurrences import (
    NO_FIT,
    FitError,
    detect_lefschetz,
    fit_recurrence,
    prefix_determinacy_check,
)
from weilcensus.torsion import ell_invariants, verify_torsion_law
from weilcensus.twists import (
    DihedralDatum,
    InvolutionModule,
    count_dihedral_ell_adic,
    count_dihedral_mod_ell,
    lift_fiber_size,
    oracle_count,
    random_datum,
)
from weilcensus.weil import (
    TwoTorsionModule,
    point_count,
    point_count_sequence,
    validate,
    weil_sandwich,
)

P = IntPolynomial

ENUM_CAP = 1 << 20


def report(number: int, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"[acceptance] criterion {number}: {status} - {detail}")
    assert passed, detail


def test_criterion_1_oracle_point_counts():
    """Brute-force counts equal q^n + 1 - sum(alpha_i^n) for all q^n <= 2^20."""
    from weilcensus.weil import curve_point_count

    start = time.time()
    checks = 0
    assert len(ELLIPTIC_CURVES) >= 5
    assert {c.q for c in ELLIPTIC_CURVES} == {2, 3, 5}
    for curve in ELLIPTIC_CURVES:
        n1 = brute_force_count(curve, 1)
        zeta = zeta_from_counts(curve.q, 1, [n1])  # reconstructed Weil polynomial
        n = 1
        while curve.q ** n <= ENUM_CAP:
            assert brute_force_count(curve, n) == curve_point_count(zeta.weil, n), (
                curve.label, n,
            )
            checks += 1
            n += 1
    elapsed = time.time() - start
    report(1, elapsed <= 60,
           f"{checks} (curve, n) pairs over {len(ELLIPTIC_CURVES)} curves, exact, "
           f"{elapsed:.1f}s (budget 60s)")


def test_criterion_2_torsion_proposition_suite():
    """The (gcd, valuation) law holds for n <= 48 with a certified window."""
    start = time.time()
    pairs = 0
    for curve in ELLIPTIC_CURVES + GENUS2_CURVES:
        zeta = zeta_data(curve)
        for ell in (3, 5, 7, 11):
            if zeta.q % ell == 0:
                continue
            invariants = ell_invariants(zeta.weil, ell)
            rep = verify_torsion_law(zeta.weil, ell, 48, invariants)
            assert rep.passed, (curve.label, ell, rep.failures()[:2])
            # stabilization law for 3 consecutive j beyond the reported index
            for d, g_d in invariants.g_of_d.items():
                for j in range(invariants.j_ell, invariants.j_ell + 3):
                    n_now = invariants.n_table[(d, j)]
                    n_next = invariants.n_table[(d, j + 1)]
                    assert n_next == ell ** g_d * n_now, (curve.label, ell, d, j)
            pairs += 1
    elapsed = time.time() - start
    report(2, pairs >= 12 and elapsed <= 120,
           f"{pairs} (curve, ell) pairs, law exact for n <= 48, "
           f"window certified, {elapsed:.1f}s (budget 120s)")


def test_criterion_3_twist_count_oracle_equivalence():
    """Formula counts equal exhaustive enumeration on 500 random data."""
    start = time.time()
    rng = random.Random(20260810)
    checked = 0
    while checked < 500:
        datum = random_datum(rng)
        if datum.mprime.order > 10 ** 4:
            continue
        assert count_dihedral_ell_adic(datum) == oracle_count(datum)
        for ell in (3, 5):
            assert count_dihedral_mod_ell(datum, ell) == oracle_count(datum, ell)
        checked += 1
    # a datum witnessing that the two counts do not differ by the fiber size
    witness = DihedralDatum(mprime=InvolutionModule((9,), ((-1,),)), m_order=2)
    adic = count_dihedral_ell_adic(witness)
    mod = count_dihedral_mod_ell(witness, 3)
    assert adic == oracle_count(witness) and mod == oracle_count(witness, 3)
    assert adic != lift_fiber_size(witness, 3) * mod
    elapsed = time.time() - start
    report(3, elapsed <= 120,
           f"500 random data, formula == oracle for ell-adic and mod-3/mod-5, "
           f"witness 4 != 1 * 0 included, {elapsed:.1f}s (budget 120s)")


def test_criterion_4_census_consistency():
    """Census equals the direct half-sums; n = 2 row is (90, 10); strictness."""
    inp = synthetic_census()
    for n in range(1, 25):
        direct = Fraction(0)
        for beta in inp.betas:
            if n % beta.n_beta:
                continue
            cover = point_count(beta.cover_weil, n // beta.n_beta)
            base = point_count(inp.base.weil, n)
            direct += Fraction(cover, 2) - Fraction(beta.e_beta * base, 4)
        assert direct == census_ell_adic(inp, n), n
    rows = census_series(inp, 3, 24)
    n2 = rows[1]
    assert (n2.count_ell_adic, n2.count_mod_ell) == (90, 10)
    strict = [r.n for r in rows if r.count_mod_ell < r.count_ell_adic]
    report(4, len(strict) >= 4,
           f"direct sums match for n <= 24, n = 2 row is (90, 10), "
           f"strict inequality at {len(strict)} values of n")


def test_criterion_5_weil_sandwich():
    """Every shipped Picard order lies inside the exact Weil bounds."""
    checked = 0
    for curve in ELLIPTIC_CURVES + GENUS2_CURVES:
        zeta = zeta_data(curve)
        for n in range(1, 25):
            assert weil_sandwich(point_count(zeta.weil, n), zeta.q, n, zeta.g)
            checked += 1
    inp = synthetic_census()
    for n in range(1, 25):
        assert weil_sandwich(point_count(inp.base.weil, n), inp.base.q, n, inp.base.g)
        checked += 1
        for beta in inp.betas:
            if n % beta.n_beta:
                continue
            order = point_count(beta.cover_weil, n // beta.n_beta)
            assert weil_sandwich(order, beta.cover_weil.q, n // beta.n_beta,
                                 2 * inp.base.g - 1)
            checked += 1
    report(5, True, f"{checked} Picard orders inside the exact sandwich bounds")


def test_criterion_6_recurrence_recovery():
    """Minimal polynomial, prefix determinacy, shape detection, and no-fit."""
    start = time.time()
    a = validate(2, P([2, 0, 1]))
    seq = point_count_sequence(a, 24)
    formula = fit_recurrence(seq)
    expected = P([-1, 1]) * P([-2, 1]) * P([2, 0, 1])
    assert [Fraction(c) for c in expected.coeffs] == list(formula.min_poly)
    assert formula.evaluate_range(24) == [Fraction(x) for x in seq]
    assert formula.k == 4
    assert prefix_determinacy_check(formula, seq)
    q, g = 2, 2
    constructed = [q ** (5 * n) + 2 * q ** n - 3 ** n for n in range(1, 12)]
    rep = detect_lefschetz(constructed, q, g)
    assert rep.fits and not rep.drinfeld_shape  # weight of 3 is not half-integral in q
    shaped = [q ** (5 * n) + 2 * q ** n for n in range(1, 12)]
    rep2 = detect_lefschetz(shaped, q, g)
    assert rep2.fits and rep2.drinfeld_shape
    inp = synthetic_census()
    stripped = [census_mod_ell(inp, 3, n) for n in range(1, 26)]
    rep3 = detect_lefschetz(stripped, 2, 2)
    assert not rep3.fits and rep3.failure_reason == NO_FIT
    elapsed = time.time() - start
    report(6, elapsed <= 30,
           f"min poly (X-1)(X-2)(X^2+2) recovered, prefix determinacy with 8 terms, "
           f"shape detected, stripped series reports no fit, {elapsed:.1f}s (budget 30s)")


def test_criterion_7_asymptotic_probe():
    """v_3(ratio) affine along 2 * 3^k and eventually constant at fixed j = 0."""
    inp = synthetic_census()
    geometric = asymptotic_ratio_probe(inp, 3, [2 * 3 ** k for k in range(4)])
    (chain,) = geometric.geometric
    assert chain.ns == (2, 6, 18, 54)
    assert chain.affine and chain.slope is not None
    fixed = asymptotic_ratio_probe(inp, 3, [2, 4, 8, 10, 14])
    (check,) = fixed.fixed_j
    assert check.j == 0 and check.stabilized
    report(7, True,
           f"affine along 2*3^k (slope {chain.slope}), fixed j = 0 stabilizes "
           f"at value {check.tail_value} from n = {check.onset}")


def test_criterion_8_closed_form_spot_checks():
    """Dimension formula, label capacity, and the fully split label count."""
    assert deformation_dimension(2, 2) == 6
    inp = synthetic_census()
    with pytest.raises(ValueError, match="capacity"):
        DihedralCensusInput(base=inp.base, betas=inp.betas * 16)
    g = inp.base.g
    split = TwoTorsionModule(tuple(ModPoly(2, (1, 1)) for _ in range(2 * g)))
    assert cover_count(split, 1) == 2 ** (2 * g) - 1
    report(8, True,
           "deformation dimension 6, label capacity enforced, "
           f"split 2-torsion reaches {2 ** (2 * g) - 1} labels")
