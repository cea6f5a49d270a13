"""Dihedral censuses assembled from curve-level data.

A census input is the Weil data of a base curve of genus g >= 2 together with
a list of quadratic-label records: for each label, the least extension degree
n_beta over which it is defined, an index e in {1, 2}, and the Weil
polynomial of the degree-2 cover's Jacobian over F_{q^{n_beta}} (degree
2(2g-1)).  The census value at n sums, over the labels with n_beta | n, half
of (cover Picard order minus e/2 times the base Picard order); the mod-ell
variant replaces every Picard order by its prime-to-ell part.

Label records are user-supplied input: deriving covers from curve equations
is out of scope, so shipped inputs are synthetic but Weil-valid.  All the
half-integer arithmetic is exact rational with integrality asserted at the
end.  The asymptotic probe reports measured ell-adic valuations of the
ell-adic/mod-ell ratio; it measures, it does not fit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import divisors, is_prime, prime_to_ell_part, v_ell
from .curves import ZetaData
from .weil import TwoTorsionModule, WeilPolynomial, fixed_two_torsion, point_count


class InconsistentBetaRecord(ValueError):
    """A census summand failed integrality or a structural constraint."""


@dataclass(frozen=True)
class BetaRecord:
    """One quadratic label: definition degree, index e, and cover Weil data."""

    label: str
    n_beta: int
    e_beta: int
    cover_weil: WeilPolynomial

    def __post_init__(self):
        if self.n_beta < 1:
            raise InconsistentBetaRecord("n_beta must be >= 1")
        if self.e_beta not in (1, 2):
            raise InconsistentBetaRecord(f"e_beta = {self.e_beta} is not 1 or 2")


@dataclass(frozen=True)
class DihedralCensusInput:
    base: ZetaData
    betas: tuple[BetaRecord, ...]

    def __post_init__(self):
        g = self.base.g
        if g < 2:
            raise ValueError("census base must have genus >= 2")
        capacity = 2 ** (2 * g) - 1
        if len(self.betas) > capacity:
            raise ValueError(
                f"{len(self.betas)} labels exceed the capacity 2^(2g) - 1 = {capacity}"
            )
        for beta in self.betas:
            if beta.cover_weil.ch.degree != 2 * (2 * g - 1):
                raise InconsistentBetaRecord(
                    f"cover for {beta.label!r} must have degree {2 * (2 * g - 1)}"
                )
            if beta.cover_weil.q != self.base.q ** beta.n_beta:
                raise InconsistentBetaRecord(
                    f"cover for {beta.label!r} must live over q^n_beta = "
                    f"{self.base.q ** beta.n_beta}"
                )

    @property
    def n_b(self) -> int:
        """lcm of the definition degrees (1 for an empty label list)."""
        return math.lcm(*(b.n_beta for b in self.betas)) if self.betas else 1


def _census_sum(inp: DihedralCensusInput, n: int, ell: int | None) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    total = Fraction(0)
    base_order: int | None = None
    for beta in inp.betas:
        if n % beta.n_beta != 0:
            continue
        if base_order is None:
            base_order = point_count(inp.base.weil, n)
            if ell is not None:
                base_order = prime_to_ell_part(base_order, ell)
        cover_order = point_count(beta.cover_weil, n // beta.n_beta)
        if ell is not None:
            cover_order = prime_to_ell_part(cover_order, ell)
        total += Fraction(cover_order, 2) - Fraction(beta.e_beta * base_order, 4)
    if total.denominator != 1 or total < 0:
        raise InconsistentBetaRecord(
            f"census value {total} at n = {n} is not a nonnegative integer "
            "(an e_beta is wrong or a cover is inconsistent)"
        )
    return int(total)


def census_ell_adic(inp: DihedralCensusInput, n: int) -> int:
    """Stably irreducible dihedral classes up to base twists, char-0 coefficients."""
    return _census_sum(inp, n, None)


def census_mod_ell(inp: DihedralCensusInput, ell: int, n: int) -> int:
    """The same census with every Picard order replaced by its prime-to-ell part."""
    _require_odd_ell(inp, ell)
    return _census_sum(inp, n, ell)


def _require_odd_ell(inp: DihedralCensusInput, ell: int) -> None:
    if ell == 2:
        raise ValueError("ell must be odd")
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if inp.base.q % ell == 0:
        raise ValueError("ell must not divide q")


@dataclass(frozen=True)
class CensusRow:
    n: int
    count_ell_adic: int
    count_mod_ell: int
    ratio: Fraction | None
    j: int
    d: int


def census_series(inp: DihedralCensusInput, ell: int, n_max: int) -> list[CensusRow]:
    """Rows for n = 1..n_max; every row checks count_mod_ell <= count_ell_adic."""
    _require_odd_ell(inp, ell)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n_b = inp.n_b
    rows = []
    for n in range(1, n_max + 1):
        adic = census_ell_adic(inp, n)
        mod = census_mod_ell(inp, ell, n)
        if mod > adic:
            raise ArithmeticError(
                f"mod-ell census exceeds the ell-adic census at n = {n}"
            )
        ratio = Fraction(adic, mod) if mod else None
        j = v_ell(n, ell)
        assert isinstance(j, int)
        rows.append(
            CensusRow(
                n=n,
                count_ell_adic=adic,
                count_mod_ell=mod,
                ratio=ratio,
                j=j,
                d=math.gcd(n, n_b),
            )
        )
    return rows


@dataclass(frozen=True)
class LeadingCoefficients:
    """Per-divisor leading coefficients of the census growth q^{(2g-1)n}."""

    n_b: int
    by_divisor: dict[int, Fraction]

    @property
    def c1_is_zero(self) -> bool:
        return self.by_divisor.get(1, Fraction(0)) == 0


def leading_coefficients(inp: DihedralCensusInput) -> LeadingCoefficients:
    """C_d = (1/2) #{labels with n_beta | d} for each divisor d of lcm(n_beta)."""
    n_b = inp.n_b
    by_divisor = {
        d: Fraction(sum(1 for b in inp.betas if d % b.n_beta == 0), 2)
        for d in divisors(n_b)
    }
    return LeadingCoefficients(n_b=n_b, by_divisor=by_divisor)


# ---------------------------------------------------------------------------
# asymptotic ratio probe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProbeRow:
    n: int
    j: int
    count_ell_adic: int
    count_mod_ell: int
    ratio: Fraction | None
    v_ratio: int | None  # ell-adic valuation of the ratio; None when undefined


@dataclass(frozen=True)
class FixedJCheck:
    """Tail constancy of v_ell(ratio) along the fixed-j subsequence."""

    j: int
    ns: tuple[int, ...]
    values: tuple[int, ...]
    stabilized: bool
    tail_value: int | None
    onset: int | None  # first n of the constant tail


@dataclass(frozen=True)
class GeometricCheck:
    """Affineness of v_ell(ratio) along a chain n0, n0*ell, n0*ell^2, ..."""

    n0: int
    ns: tuple[int, ...]
    values: tuple[int, ...]
    affine: bool
    slope: int | None


@dataclass(frozen=True)
class RatioProbe:
    ell: int
    rows: tuple[ProbeRow, ...]
    fixed_j: tuple[FixedJCheck, ...]
    geometric: tuple[GeometricCheck, ...]


def _fixed_j_check(j: int, pairs: list[tuple[int, int]]) -> FixedJCheck:
    ns = tuple(n for n, _ in pairs)
    values = tuple(v for _, v in pairs)
    if len(values) < 2:
        return FixedJCheck(j=j, ns=ns, values=values, stabilized=False, tail_value=None, onset=None)
    tail = len(values) - 1
    while tail > 0 and values[tail - 1] == values[-1]:
        tail -= 1
    stabilized = (len(values) - tail) >= 2
    return FixedJCheck(
        j=j,
        ns=ns,
        values=values,
        stabilized=stabilized,
        tail_value=values[-1] if stabilized else None,
        onset=ns[tail] if stabilized else None,
    )


def _geometric_chains(ell: int, ns: list[int]) -> list[list[int]]:
    present = set(ns)
    chains = []
    for n in sorted(present):
        if n % ell == 0 and n // ell in present:
            continue  # not a chain start
        chain = [n]
        while chain[-1] * ell in present:
            chain.append(chain[-1] * ell)
        if len(chain) >= 3:
            chains.append(chain)
    return chains


def asymptotic_ratio_probe(
    inp: DihedralCensusInput,
    ell: int,
    n_sequence: list[int],
) -> RatioProbe:
    """Measure v_ell(ell-adic count / mod-ell count) along a monotone sequence.

    Emits one row per n (rows with a vanishing mod-ell count are marked
    undefined), then checks on the emitted data that v_ell(ratio) is
    eventually constant along each fixed-j subsequence and affine in k along
    each chain n0 * ell^k present in the sequence.
    """
    _require_odd_ell(inp, ell)
    if any(b <= a for a, b in zip(n_sequence, n_sequence[1:])):
        raise ValueError("n_sequence must be strictly increasing")
    rows = []
    for n in n_sequence:
        adic = census_ell_adic(inp, n)
        mod = census_mod_ell(inp, ell, n)
        j = v_ell(n, ell)
        assert isinstance(j, int)
        if mod == 0:
            rows.append(ProbeRow(n=n, j=j, count_ell_adic=adic, count_mod_ell=mod,
                                 ratio=None, v_ratio=None))
            continue
        ratio = Fraction(adic, mod)
        v_num = v_ell(ratio.numerator, ell)
        v_den = v_ell(ratio.denominator, ell)
        assert isinstance(v_num, int) and isinstance(v_den, int)
        rows.append(ProbeRow(n=n, j=j, count_ell_adic=adic, count_mod_ell=mod,
                             ratio=ratio, v_ratio=v_num - v_den))
    defined = [(r.n, r.j, r.v_ratio) for r in rows if r.v_ratio is not None]
    by_j: dict[int, list[tuple[int, int]]] = {}
    for n, j, v in defined:
        by_j.setdefault(j, []).append((n, v))
    fixed_j = tuple(_fixed_j_check(j, pairs) for j, pairs in sorted(by_j.items()))
    v_by_n = {n: v for n, _, v in defined}
    geometric = []
    for chain in _geometric_chains(ell, [n for n, _, _ in defined]):
        values = tuple(v_by_n[n] for n in chain)
        diffs = [b - a for a, b in zip(values, values[1:])]
        affine = len(set(diffs)) == 1
        geometric.append(
            GeometricCheck(
                n0=chain[0],
                ns=tuple(chain),
                values=values,
                affine=affine,
                slope=diffs[0] if affine else None,
            )
        )
    return RatioProbe(ell=ell, rows=tuple(rows), fixed_j=fixed_j, geometric=tuple(geometric))


# ---------------------------------------------------------------------------
# small closed forms
# ---------------------------------------------------------------------------

def cover_count(module: TwoTorsionModule, n: int) -> int:
    """Number of quadratic labels rational over F_{q^n}: #fixed 2-torsion - 1."""
    return fixed_two_torsion(module, n) - 1


def cft_character_count(zeta: ZetaData, ell: int, n: int, mode: str = "ell-adic") -> int:
    """Finite-order character count of the degree-0 class group over F_{q^n}.

    "ell-adic" mode returns the full Picard order; "mod-ell" strips the
    ell-primary part (ell odd).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    order = point_count(zeta.weil, n)
    if mode == "ell-adic":
        return order
    if mode == "mod-ell":
        if ell == 2:
            raise ValueError("ell must be odd in mod-ell mode")
        if not is_prime(ell):
            raise ValueError(f"{ell} is not prime")
        return prime_to_ell_part(order, ell)
    raise ValueError(f"unknown mode {mode!r}")


def deformation_dimension(g: int, m: int) -> int:
    """(2g - 2)(m^2 - 1): tangent dimension of the rank-m deformation space."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    if m < 1:
        raise ValueError("rank must be >= 1")
    return (2 * g - 2) * (m * m - 1)
