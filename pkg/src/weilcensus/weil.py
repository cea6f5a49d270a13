"""Weil polynomials of abelian varieties over F_q and exact point counts.

The canonical object is the characteristic polynomial of Frobenius: a monic
integer polynomial of degree 2g whose roots all have absolute value q^(1/2)
and which satisfies the q-functional equation.  Point counts over F_{q^n} are
the exact integers prod_i (1 - alpha_i^n), computed either as det(I - C^n)
for the companion matrix C (the default) or as a resultant; the two routes
are independent and cross-checked in the tests.

Root-modulus validation is the single place where numerics appear: roots are
isolated at ~60-bit working precision and |alpha|^2 - q is compared against a
fixed tolerance.  It gates input validation only and never feeds arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .algebra import (
    IntPolynomial,
    bareiss_determinant,
    companion_matrix,
    is_prime,
    mat_identity,
    mat_pow,
    mat_sub,
    prime_power_decomposition,
    resultant,
    squarefree_part,
    v_ell,
)
from .modpoly import ModPoly, poly_mod_prime

ROOT_MODULUS_TOLERANCE = 1e-10
"""Permitted deviation of |alpha|^2 from q during validation."""

_ROOT_DPS = 40  # ~60-bit isolation precision for the validation roots


class InvalidWeilPolynomial(ValueError):
    """Raised by validate(); carries the list of violated invariants."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class WeilPolynomial:
    """A validated Frobenius characteristic polynomial over F_q."""

    q: int
    ch: IntPolynomial
    g: int

    def __post_init__(self):
        if self.ch.degree != 2 * self.g:
            raise ValueError("degree of ch must be 2g")

    def __str__(self) -> str:
        return f"WeilPolynomial(q={self.q}, ch={self.ch})"


def weil_violations(q: int, ch: IntPolynomial, tol: float = ROOT_MODULUS_TOLERANCE) -> list[str]:
    """All invariant violations of (q, ch); empty when valid."""
    violations: list[str] = []
    if prime_power_decomposition(q) is None:
        violations.append(f"q = {q} is not a prime power")
    if ch.is_zero or not ch.is_monic:
        violations.append("ch must be monic")
        return violations
    deg = ch.degree
    if deg % 2 != 0:
        violations.append(f"degree {deg} is odd")
        return violations
    g = deg // 2
    if deg == 0:
        return violations
    # functional equation: q^i a_i = q^g a_{2g-i} for all i
    for i in range(deg + 1):
        if q ** i * ch.coefficient(i) != q ** g * ch.coefficient(deg - i):
            violations.append("functional equation fails")
            break
    if ch(1) <= 0:
        violations.append("ch(1) must be positive")
    # root moduli: the only numeric check in the library
    radical = squarefree_part(ch)
    with mpmath.workdps(_ROOT_DPS):
        try:
            roots = mpmath.polyroots(list(reversed(radical.coeffs)), maxsteps=200, extraprec=120)
        except mpmath.libmp.NoConvergence:  # pragma: no cover
            violations.append("root isolation did not converge")
            return violations
        for r in roots:
            err = abs(abs(r) ** 2 - q)
            if err > tol:
                violations.append(
                    f"root of modulus {float(abs(r)):.6f} violates |alpha|^2 = q"
                )
                break
    return violations


def validate(q: int, ch: IntPolynomial, tol: float = ROOT_MODULUS_TOLERANCE) -> WeilPolynomial:
    """Validate (q, ch) and return the WeilPolynomial, or raise with all violations."""
    violations = weil_violations(q, ch, tol)
    if violations:
        raise InvalidWeilPolynomial(violations)
    return WeilPolynomial(q=q, ch=ch, g=ch.degree // 2)


def point_count(a: WeilPolynomial, n: int, method: str = "companion") -> int:
    """#A(F_{q^n}) = prod_i (1 - alpha_i^n), exactly; positive for every n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a.g == 0:
        return 1
    if method == "companion":
        c = companion_matrix(a.ch)
        m = mat_sub(mat_identity(2 * a.g), mat_pow(c, n))
        value = bareiss_determinant(m)
    elif method == "resultant":
        one_minus_tn = IntPolynomial((1,) + (0,) * (n - 1) + (-1,))
        value = resultant(a.ch, one_minus_tn)
    else:
        raise ValueError(f"unknown method {method!r}")
    if value <= 0:
        raise ArithmeticError("nonpositive point count: input violates the Weil bounds")
    return value


def point_count_sequence(a: WeilPolynomial, n_max: int) -> list[int]:
    """[#A(F_q), #A(F_{q^2}), ..., #A(F_{q^n_max})]."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [point_count(a, n) for n in range(1, n_max + 1)]


def frobenius_power_sum(a: WeilPolynomial, n: int) -> int:
    """sum_i alpha_i^n, exactly, as the trace of the companion-matrix power."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if a.g == 0:
        return 0
    cn = mat_pow(companion_matrix(a.ch), n)
    return sum(cn[i][i] for i in range(2 * a.g))


def curve_point_count(a: WeilPolynomial, n: int) -> int:
    """#X(F_{q^n}) = q^n + 1 - sum_i alpha_i^n for a curve with Jacobian data a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return a.q ** n + 1 - frobenius_power_sum(a, n)


def point_count_valuation(a: WeilPolynomial, ell: int, n: int, max_bits: int = 4096) -> int:
    """v_ell(#A(F_{q^n})) without forming the full count.

    Works modulo ell^K for doubling K: reduce the companion power mod ell^K,
    take the exact determinant of the small residue matrix, and read off the
    valuation once it is < K.  This stays cheap even for n with huge ell-power
    part, where the full count would have billions of digits.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if a.g == 0:
        return 0
    c = companion_matrix(a.ch)
    k = 16
    while True:
        mod = ell ** k
        cn = mat_pow(c, n, mod)
        m = mat_sub(mat_identity(2 * a.g), cn)
        r = bareiss_determinant(m) % mod
        if r != 0:
            v = v_ell(r, ell)
            assert isinstance(v, int)
            return v
        k *= 2
        if ell ** k > 1 << max_bits:
            raise ArithmeticError(
                "point count is divisible by an enormous power of ell; "
                "the input violates the Weil constraints"
            )


def weil_sandwich(count: int, q: int, n: int, g: int) -> bool:
    """Exact test of (q^{n/2}-1)^{2g} <= count <= (q^{n/2}+1)^{2g}.

    Expands (q^{n/2} +- 1)^{2g} as A +- B q^{n/2} with integers A, B >= 0 and
    compares by squaring, so no irrational number is ever rounded.
    """
    if g == 0:
        return count == 1
    a_part = 0
    b_part = 0
    for i in range(2 * g + 1):
        term = math.comb(2 * g, i)
        if i % 2 == 0:
            a_part += term * q ** (n * i // 2)
        else:
            b_part += term * q ** (n * (i - 1) // 2)
    qn = q ** n
    # lower bound: count >= A - B q^{n/2}
    if count < a_part and (a_part - count) ** 2 > b_part ** 2 * qn:
        return False
    # upper bound: count <= A + B q^{n/2}
    if count > a_part and (count - a_part) ** 2 > b_part ** 2 * qn:
        return False
    return True


# ---------------------------------------------------------------------------
# Frobenius module structure on 2-torsion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoTorsionModule:
    """F_2[Frobenius]-module structure of the 2-torsion, as invariant factors.

    The invariant factors are monic polynomials over F_2, each dividing the
    next, with degrees summing to 2g.  The characteristic polynomial mod 2
    alone does not pin down this module; the default below takes the cyclic
    module on ch mod 2, and callers with better knowledge can supply the true
    invariant factors.
    """

    invariant_factors: tuple[ModPoly, ...]

    def __post_init__(self):
        for f in self.invariant_factors:
            if f.p != 2 or not f.is_monic:
                raise ValueError("invariant factors must be monic over F_2")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if not (b % a).is_zero:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def dimension(self) -> int:
        return sum(f.degree for f in self.invariant_factors)

    @staticmethod
    def from_weil(a: WeilPolynomial) -> "TwoTorsionModule":
        """Default cyclic module: the single invariant factor ch mod 2."""
        if a.g == 0:
            return TwoTorsionModule(())
        return TwoTorsionModule((poly_mod_prime(a.ch, 2),))

    def matches(self, a: WeilPolynomial) -> bool:
        """Whether the factors multiply to ch mod 2 (degrees summing to 2g)."""
        prod = ModPoly.one(2)
        for f in self.invariant_factors:
            prod = prod * f
        return prod == poly_mod_prime(a.ch, 2)


def fixed_two_torsion(module: TwoTorsionModule, n: int) -> int:
    """#ker(T^n - 1) on the module: 2 ** sum_i deg gcd(f_i, T^n - 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    x = ModPoly.x(2)
    one = ModPoly.one(2)
    for f in module.invariant_factors:
        if f.degree == 0:
            continue
        residue = x.pow_mod(n, f) - one  # gcd(f, T^n - 1) = gcd(f, T^n mod f - 1)
        g = f.gcd(residue) if not residue.is_zero else f
        total += g.degree
    return 1 << total
