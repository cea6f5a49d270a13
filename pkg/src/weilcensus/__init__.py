"""Exact counting of abelian-variety points over finite fields, ell-power
torsion invariants, dihedral twist censuses, and power-sum recurrence
analysis, with exhaustive oracles at every layer."""

from .algebra import (
    IntPolynomial,
    RatMatrix,
    SmithForm,
    resultant,
    smith_normal_form,
    v_ell,
)
from .census import (
    BetaRecord,
    CensusRow,
    DihedralCensusInput,
    asymptotic_ratio_probe,
    census_ell_adic,
    census_mod_ell,
    census_series,
    cft_character_count,
    cover_count,
    deformation_dimension,
    leading_coefficients,
)
from .curves import (
    CurveModel,
    CurveSpec,
    FiniteField,
    ZetaData,
    brute_force_count,
    jacobian_count,
    make_field,
    zeta_data,
    zeta_from_counts,
)
from .modpoly import ModPoly, factor, poly_mod_prime
from .recurrences import (
    FitError,
    LefschetzReport,
    PowerSumFormula,
    detect_lefschetz,
    fit_recurrence,
    prefix_determinacy_check,
)
from .torsion import (
    EllInvariants,
    compute_h_and_g,
    compute_j_and_table,
    ell_invariants,
    torsion_part,
    verify_torsion_law,
)
from .twists import (
    DihedralDatum,
    InvolutionModule,
    compute_e,
    count_dihedral_ell_adic,
    count_dihedral_mod_ell,
    lift_fiber_size,
    oracle_count,
    subgroup_image,
)
from .weil import (
    InvalidWeilPolynomial,
    TwoTorsionModule,
    WeilPolynomial,
    curve_point_count,
    fixed_two_torsion,
    point_count,
    point_count_sequence,
    validate,
    weil_sandwich,
)

__version__ = "0.1.0"
