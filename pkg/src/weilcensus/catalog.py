"""Curated example inputs.

Every number here is derived: elliptic and hyperelliptic base curves are
given by explicit equations whose counts come from exhaustive enumeration,
and the census label records are synthetic Weil-valid covers (each quadratic
factor has constant term q, so the functional equation and root moduli hold).
The genus-2 census base equals the Jacobian data of y^2 + y = x^5 + x + 1
over F_2, so its polynomial is independently reproducible by enumeration.
"""

from __future__ import annotations

from .algebra import IntPolynomial
from .census import BetaRecord, DihedralCensusInput
from .curves import CurveModel, CurveSpec, ZetaData, zeta_data
from .weil import validate

#: Elliptic curves over prime fields; counts reproducible by enumeration.
ELLIPTIC_CURVES: tuple[CurveSpec, ...] = (
    CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1),
              label="y^2 + y = x^3 over F_2"),
    CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a1=1, a2=1, a6=1),
              label="y^2 + xy = x^3 + x^2 + 1 over F_2"),
    CurveSpec(q=3, genus=1, model=CurveModel.elliptic(a4=1, a6=1),
              label="y^2 = x^3 + x + 1 over F_3"),
    CurveSpec(q=3, genus=1, model=CurveModel.elliptic(a4=2, a6=1),
              label="y^2 = x^3 + 2x + 1 over F_3"),
    CurveSpec(q=5, genus=1, model=CurveModel.elliptic(a4=1, a6=2),
              label="y^2 = x^3 + x + 2 over F_5"),
    CurveSpec(q=5, genus=1, model=CurveModel.elliptic(a6=1),
              label="y^2 = x^3 + 1 over F_5"),
)

#: Genus-2 curves with smooth models at desk scale.
GENUS2_CURVES: tuple[CurveSpec, ...] = (
    CurveSpec(q=2, genus=2, model=CurveModel.hyperelliptic(h=(1,), f=(1, 1, 0, 0, 0, 1)),
              label="y^2 + y = x^5 + x + 1 over F_2"),
    CurveSpec(q=3, genus=2, model=CurveModel.hyperelliptic(h=(), f=(0, 1, 0, 0, 0, 1)),
              label="y^2 = x^5 + x over F_3"),
    CurveSpec(q=3, genus=2, model=CurveModel.hyperelliptic(h=(), f=(1, 0, 0, 0, 0, 1)),
              label="y^2 = x^5 + 1 over F_3"),
)

CURATED_CURVES: tuple[CurveSpec, ...] = ELLIPTIC_CURVES + GENUS2_CURVES


def synthetic_census() -> DihedralCensusInput:
    """The shipped genus-2 census: one label defined over the base field.

    Base: q = 2, ch = (T^2 + 2)(T^2 - 2T + 2), the Jacobian of
    y^2 + y = x^5 + x + 1 over F_2.  Cover: the base polynomial times
    T^2 + 2T + 2, a degree-6 Weil-valid polynomial over F_2; e = 2.
    """
    base_ch = IntPolynomial((4, -4, 4, -2, 1))
    base = ZetaData(
        q=2, g=2,
        weil=validate(2, base_ch),
        point_counts=(1, 9),
    )
    cover_ch = IntPolynomial((8, 0, 4, 0, 2, 0, 1))  # base_ch * (T^2 + 2T + 2)
    beta = BetaRecord(
        label="beta1",
        n_beta=1,
        e_beta=2,
        cover_weil=validate(2, cover_ch),
    )
    return DihedralCensusInput(base=base, betas=(beta,))


def two_label_census() -> DihedralCensusInput:
    """A second census whose labels appear only over extensions (n_beta 2 and 3).

    Covers over F_4 and F_8 are products of quadratics with constant terms 4
    and 8, so each is Weil-valid over its own base field.
    """
    base_ch = IntPolynomial((4, -4, 4, -2, 1))
    base = ZetaData(q=2, g=2, weil=validate(2, base_ch), point_counts=(1, 9))
    cover4 = (
        IntPolynomial((4, 0, 1))        # T^2 + 4
        * IntPolynomial((4, -2, 1))     # T^2 - 2T + 4
        * IntPolynomial((4, 2, 1))      # T^2 + 2T + 4
    )
    cover8 = (
        IntPolynomial((8, 0, 1))        # T^2 + 8
        * IntPolynomial((8, -2, 1))     # T^2 - 2T + 8
        * IntPolynomial((8, 4, 1))      # T^2 + 4T + 8
    )
    betas = (
        BetaRecord(label="beta_deg2", n_beta=2, e_beta=2, cover_weil=validate(4, cover4)),
        BetaRecord(label="beta_deg3", n_beta=3, e_beta=2, cover_weil=validate(8, cover8)),
    )
    return DihedralCensusInput(base=base, betas=betas)


def curve_zeta_catalog() -> dict[str, ZetaData]:
    """ZetaData for every curated curve, derived by enumeration."""
    return {c.label: zeta_data(c) for c in CURATED_CURVES}
