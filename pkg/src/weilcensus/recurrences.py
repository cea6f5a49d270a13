"""Exact recovery of generalized power sums from counting sequences.

A sequence a(1), a(2), ... is a generalized power sum when a(n) equals a
finite sum of m_i mu_i^n with constants m_i and pairwise distinct nonzero
mu_i; equivalently it satisfies a linear recurrence whose minimal polynomial
is squarefree with nonzero constant term.  Berlekamp-Massey over exact
rationals finds the minimal recurrence; a sequence of length N is accepted
only when 2k <= N, mirroring the fact that the 2k leading terms determine
the k roots and k coefficients.  Repeated roots (which would make the
coefficients polynomials in n) and zero roots are reported distinctly rather
than folded into a formula.

Root moduli for weight classification are the only numerics here: roots are
isolated to ~40 digits and |mu| is compared against half-integral powers of q
at a configurable relative tolerance, with the caveat recorded in the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import sympy

from .algebra import IntPolynomial, RatMatrix, poly_gcd

NO_FIT = "no fit within length"
REPEATED_ROOTS = "polynomial coefficients present"
ZERO_ROOT = "zero root in the minimal polynomial"

WEIGHT_TOLERANCE = 1e-9
_ROOT_DPS = 40


class FitError(ValueError):
    """A sequence admits no generalized-power-sum formula; carries the reason."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def berlekamp_massey(seq: Sequence[Fraction]) -> tuple[list[Fraction], int]:
    """Minimal connection polynomial over Q.

    Returns (c, L) with c[0] = 1 and sum_{i=0}^{L} c[i] * a[n-i] = 0 for all
    n >= L (0-based).  Exact rational arithmetic throughout.
    """
    c = [Fraction(1)]
    b = [Fraction(1)]
    length = 0
    m = 1
    last_delta = Fraction(1)
    for n, a_n in enumerate(seq):
        delta = a_n
        for i in range(1, length + 1):
            delta += c[i] * seq[n - i]
        if delta == 0:
            m += 1
            continue
        coef = delta / last_delta
        if 2 * length <= n:
            old_c = c[:]
            if len(c) < len(b) + m:
                c = c + [Fraction(0)] * (len(b) + m - len(c))
            for i, bv in enumerate(b):
                c[i + m] -= coef * bv
            length = n + 1 - length
            b = old_c
            last_delta = delta
            m = 1
        else:
            if len(c) < len(b) + m:
                c = c + [Fraction(0)] * (len(b) + m - len(c))
            for i, bv in enumerate(b):
                c[i + m] -= coef * bv
            m += 1
    return c[: length + 1], length


@dataclass(frozen=True)
class FactorData:
    """One irreducible factor of the minimal polynomial with its coefficients.

    ``coefficients`` expresses the coefficient function in the factor's root
    basis: the root mu of this factor contributes m(mu) * mu^n with
    m(mu) = sum_t coefficients[t] * mu^t.
    """

    poly: IntPolynomial
    coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class PowerSumFormula:
    """Exact generalized power sum: squarefree minimal polynomial plus factor data."""

    min_poly: tuple[Fraction, ...]  # monic, ascending degree
    k: int
    factors: tuple[FactorData, ...]

    def evaluate_range(self, n_max: int) -> list[Fraction]:
        """[value at n = 1, ..., value at n = n_max], exactly."""
        totals = [Fraction(0)] * n_max
        for fac in self.factors:
            d = fac.poly.degree
            lead = Fraction(fac.poly.leading)
            monic = [Fraction(cv) / lead for cv in fac.poly.coeffs]
            # power sums of the factor's roots, up to n_max + d
            psums = _power_sums(monic, n_max + d)
            for n in range(1, n_max + 1):
                acc = Fraction(0)
                for t, bt in enumerate(fac.coefficients):
                    if bt:
                        acc += bt * psums[n + t]
                totals[n - 1] += acc
        return totals

    def evaluate(self, n: int) -> Fraction:
        return self.evaluate_range(n)[-1]


def _power_sums(monic_ascending: list[Fraction], n_max: int) -> list[Fraction]:
    """Power sums p(0..n_max) of the roots of a monic polynomial, by Newton."""
    d = len(monic_ascending) - 1
    e = [(-1) ** k * monic_ascending[d - k] for k in range(d + 1)]  # elementary symmetric
    p = [Fraction(0)] * (n_max + 1)
    p[0] = Fraction(d)
    for k in range(1, n_max + 1):
        if k <= d:
            acc = Fraction(0)
            for i in range(1, k):
                acc += (-1) ** (i - 1) * e[i] * p[k - i]
            acc += (-1) ** (k - 1) * k * e[k]
            p[k] = acc
        else:
            acc = Fraction(0)
            for i in range(1, d + 1):
                acc += (-1) ** (i - 1) * e[i] * p[k - i]
            p[k] = acc
    return p


def _rational_factors(monic_ascending: list[Fraction]) -> list[IntPolynomial]:
    """Irreducible factors over Q as primitive integer polynomials (ascending)."""
    x = sympy.Symbol("X")
    poly = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(monic_ascending)],
        x,
        domain="QQ",
    )
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        if mult != 1:  # pragma: no cover - excluded by the squarefree gate
            raise FitError(REPEATED_ROOTS)
        coeffs = [Fraction(str(c)) for c in reversed(fac.all_coeffs())]
        denom = 1
        for c in coeffs:
            denom = denom * c.denominator // __gcd(denom, c.denominator)
        ints = [int(c * denom) for c in coeffs]
        g = 0
        for v in ints:
            g = __gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        out.append(IntPolynomial(ints))
    out.sort(key=lambda f: (f.degree, f.coeffs))
    return out


def __gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def fit_recurrence(seq: Sequence[int | Fraction]) -> PowerSumFormula:
    """Fit an exact generalized power sum to a sequence indexed from n = 1.

    Raises FitError with reason "no fit within length" when the minimal
    recurrence order k fails 2k <= len(seq) (the first 2k terms determine the
    formula, so anything shorter is unconfirmed), "polynomial coefficients
    present" when the minimal polynomial has repeated roots, and "zero root
    in the minimal polynomial" when it is divisible by X.
    """
    terms = [Fraction(x) for x in seq]
    if len(terms) < 2:
        raise ValueError("need at least 2 terms")
    conn, k = berlekamp_massey(terms)
    if 2 * k > len(terms):
        raise FitError(NO_FIT)
    # minimal polynomial X^k + c_1 X^(k-1) + ... + c_k, ascending storage
    min_poly = tuple(conn[k - i] for i in range(k)) + (Fraction(1),)
    if k > 0 and min_poly[0] == 0:
        raise FitError(ZERO_ROOT)
    # squarefree check on the integer model of the minimal polynomial
    denom = 1
    for c in min_poly:
        denom = denom * c.denominator // __gcd(denom, c.denominator)
    int_model = IntPolynomial([int(c * denom) for c in min_poly])
    if poly_gcd(int_model, int_model.derivative()).degree > 0:
        raise FitError(REPEATED_ROOTS)
    # verify the recurrence reproduces every supplied term
    for n in range(k, len(terms)):
        acc = terms[n]
        for i in range(1, k + 1):
            acc += conn[i] * terms[n - i]
        if acc != 0:  # pragma: no cover - BM guarantees this
            raise FitError(NO_FIT)
    factors = _rational_factors(list(min_poly))
    # solve for the coefficient functions: a(n) = sum_j sum_t b_{j,t} p_j(n + t)
    columns: list[tuple[int, int]] = []
    psums: dict[int, list[Fraction]] = {}
    for j, fac in enumerate(factors):
        d = fac.degree
        lead = Fraction(fac.leading)
        monic = [Fraction(cv) / lead for cv in fac.coeffs]
        psums[j] = _power_sums(monic, k + d)
        columns.extend((j, t) for t in range(d))
    matrix = [[psums[j][n + t] for (j, t) in columns] for n in range(1, k + 1)]
    rhs = terms[:k]
    solution = RatMatrix(matrix).solve(rhs)
    factor_data = []
    pos = 0
    for j, fac in enumerate(factors):
        d = fac.degree
        factor_data.append(
            FactorData(poly=fac, coefficients=tuple(solution[pos: pos + d]))
        )
        pos += d
    formula = PowerSumFormula(min_poly=min_poly, k=k, factors=tuple(factor_data))
    if formula.evaluate_range(len(terms)) != terms:
        raise FitError(NO_FIT)  # pragma: no cover - the solve is exact
    return formula


def prefix_determinacy_check(formula: PowerSumFormula, seq: Sequence[int | Fraction]) -> bool:
    """Whether the first 2k terms alone already pin down this exact formula.

    True iff the formula reproduces every supplied term and refitting on
    exactly the first 2k terms returns the identical formula.
    """
    terms = [Fraction(x) for x in seq]
    if len(terms) < 2 * formula.k:
        raise ValueError("need at least 2k terms")
    if formula.evaluate_range(len(terms)) != terms:
        return False
    try:
        refit = fit_recurrence(terms[: 2 * formula.k])
    except FitError:
        return False
    return refit == formula


# ---------------------------------------------------------------------------
# Lefschetz-shape detection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootWeight:
    factor: str
    modulus: float
    weight: int | None  # j with |mu| = q^(j/2), when one matches


@dataclass(frozen=True)
class LefschetzReport:
    fits: bool
    k: int | None
    leading_root: str | None
    weight_table: tuple[RootWeight, ...]
    drinfeld_shape: bool
    failure_reason: str | None
    tolerance_note: str


def _root_weights(factors: Sequence[FactorData], q: int, rel_tol: float) -> list[RootWeight]:
    import math

    out = []
    with mpmath.workdps(_ROOT_DPS):
        for fac in factors:
            roots = mpmath.polyroots(
                list(reversed(fac.poly.coeffs)), maxsteps=200, extraprec=120
            )
            for r in roots:
                modulus = float(abs(r))
                weight = None
                if modulus > 0:
                    j = round(2 * math.log(modulus, q))
                    if j >= 0 and abs(modulus - q ** (j / 2)) <= rel_tol * q ** (j / 2):
                        weight = j
                out.append(RootWeight(factor=str(fac.poly), modulus=modulus, weight=weight))
    return out


def detect_lefschetz(
    seq: Sequence[int | Fraction],
    q: int,
    g: int,
    rel_tol: float = WEIGHT_TOLERANCE,
) -> LefschetzReport:
    """Fit the sequence and classify its roots against half-integral weights.

    ``drinfeld_shape`` is True iff (X - q^(4g-3)) divides the minimal
    polynomial with coefficient exactly 1 and every other root looks like a
    Weil number of weight j with 0 <= j/2 < 4g - 3 at the given tolerance.
    """
    note = (
        f"weights classified numerically at relative tolerance {rel_tol:g}; "
        "|mu| = q^(j/2) is a measured judgement, not a proof"
    )
    try:
        formula = fit_recurrence(seq)
    except FitError as exc:
        return LefschetzReport(
            fits=False,
            k=None,
            leading_root=None,
            weight_table=(),
            drinfeld_shape=False,
            failure_reason=exc.reason,
            tolerance_note=note,
        )
    weights = _root_weights(formula.factors, q, rel_tol)
    if not weights:  # the identically-zero sequence
        return LefschetzReport(
            fits=True,
            k=0,
            leading_root=None,
            weight_table=(),
            drinfeld_shape=False,
            failure_reason=None,
            tolerance_note=note,
        )
    leading = max(weights, key=lambda w: w.modulus)
    target = q ** (4 * g - 3)
    lead_poly = IntPolynomial((-target, 1))
    has_leading = any(
        fac.poly == lead_poly and fac.coefficients == (Fraction(1),)
        for fac in formula.factors
    )
    window = 2 * (4 * g - 3)  # weights j with j/2 < 4g-3
    others_ok = all(
        w.weight is not None and w.weight < window
        for w in weights
        if abs(w.modulus - target) > rel_tol * target
    )
    return LefschetzReport(
        fits=True,
        k=formula.k,
        leading_root=f"|mu| = {leading.modulus:.6g}"
        + (f" (weight {leading.weight})" if leading.weight is not None else ""),
        weight_table=tuple(weights),
        drinfeld_shape=has_leading and others_ok,
        failure_reason=None,
        tolerance_note=note,
    )
