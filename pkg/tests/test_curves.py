import pytest

from weilcensus.algebra import IntPolynomial, prime_power_decomposition
from weilcensus.catalog import CURATED_CURVES, ELLIPTIC_CURVES
from weilcensus.curves import (
    CurveModel,
    CurveSpec,
    EnumerationCapExceeded,
    brute_force_count,
    jacobian_count,
    l_polynomial,
    make_field,
    zeta_data,
    zeta_from_counts,
    zeta_from_l_polynomial,
    _infinity_count,
)
from weilcensus.weil import InvalidWeilPolynomial, curve_point_count, point_count

P = IntPolynomial


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

def test_make_field_examples():
    assert str(make_field(2, 1).modulus) == "T"
    assert str(make_field(2, 2).modulus) == "T^2 + T + 1"
    assert str(make_field(3, 2).modulus) == "T^2 + 1"


def test_make_field_errors():
    with pytest.raises(ValueError, match="not prime"):
        make_field(4, 1)
    with pytest.raises(ValueError, match="cap"):
        make_field(2, 25)


def test_field_arithmetic_is_a_field():
    f = make_field(3, 2)
    elems = list(f.elements())
    assert len(elems) == 9
    one = f.one
    for x in elems:
        if x == f.zero:
            continue
        assert f.mul(x, f.inv(x)) == one
    # associativity spot check
    a, b, c = elems[2], elems[5], elems[7]
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


def test_field_square_detection():
    f = make_field(5, 1)
    squares = {f.mul(x, x) for x in f.elements()}
    for x in f.elements():
        assert f.is_square(x) == (x in squares)


# ---------------------------------------------------------------------------
# brute-force counting against an independent slow oracle
# ---------------------------------------------------------------------------

def _slow_count(curve: CurveSpec, n: int) -> int:
    p, a = prime_power_decomposition(curve.q)
    field = make_field(p, a * n)
    model = curve.model

    def ev(coeffs, x):
        acc = field.zero
        for c in reversed(coeffs):
            acc = field.add(field.mul(acc, x), field.embed(c))
        return acc

    total = 0
    for x in field.elements():
        hx, fx = ev(model.h, x), ev(model.f, x)
        for y in field.elements():
            if field.add(field.mul(y, y), field.mul(hx, y)) == fx:
                total += 1
    return total + _infinity_count(field, model)


SMALL_CASES = [
    (CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1)), (1, 2, 3)),
    (CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a1=1, a2=1, a6=1)), (1, 2, 3)),
    (CurveSpec(q=3, genus=1, model=CurveModel.elliptic(a4=1, a6=1)), (1, 2, 3)),
    (CurveSpec(q=5, genus=1, model=CurveModel.elliptic(a4=1, a6=2)), (1, 2)),
    (CurveSpec(q=7, genus=1, model=CurveModel.elliptic(a4=3, a6=1)), (1, 2)),
    (CurveSpec(q=2, genus=2, model=CurveModel.hyperelliptic(h=(1,), f=(1, 1, 0, 0, 0, 1))), (1, 2, 3)),
    (CurveSpec(q=3, genus=2, model=CurveModel.hyperelliptic(h=(), f=(0, 1, 0, 0, 0, 1))), (1, 2)),
    # even-degree f: two or zero points at infinity
    (CurveSpec(q=5, genus=2, model=CurveModel.hyperelliptic(h=(), f=(1, 1, 0, 0, 0, 0, 1))), (1, 2)),
    (CurveSpec(q=3, genus=2, model=CurveModel.hyperelliptic(h=(), f=(2, 1, 0, 0, 0, 0, 2))), (1, 2)),
    # base field F_4
    (CurveSpec(q=4, genus=1, model=CurveModel.elliptic(a3=1, a6=1)), (1, 2)),
]


@pytest.mark.parametrize("curve,ns", SMALL_CASES)
def test_brute_force_matches_slow_oracle(curve, ns):
    for n in ns:
        assert brute_force_count(curve, n) == _slow_count(curve, n)


def test_brute_force_examples():
    e = CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1))
    assert brute_force_count(e, 1) == 3
    assert brute_force_count(e, 2) == 9


def test_brute_force_chunk_independence():
    e = CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a1=1, a2=1, a6=1))
    a = brute_force_count(e, 10, chunk=1 << 16)
    b = brute_force_count(e, 10, chunk=977)
    c = brute_force_count(e, 10, chunk=1)
    assert a == b == c


def test_brute_force_cap():
    e = CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1))
    with pytest.raises(EnumerationCapExceeded):
        brute_force_count(e, 21)
    assert brute_force_count(e, 11, enum_cap=1 << 11) > 0
    with pytest.raises(EnumerationCapExceeded):
        brute_force_count(e, 11, enum_cap=1 << 10)


def test_brute_force_needs_model():
    spec = CurveSpec(q=2, genus=1, counts=(3,))
    with pytest.raises(ValueError, match="model"):
        brute_force_count(spec, 1)


def test_char2_inseparable_model_rejected():
    spec = CurveSpec(q=2, genus=2, model=CurveModel.hyperelliptic(h=(), f=(1, 1, 0, 0, 0, 1)))
    with pytest.raises(ValueError, match="inseparable"):
        brute_force_count(spec, 1)


# ---------------------------------------------------------------------------
# zeta reconstruction
# ---------------------------------------------------------------------------

def test_zeta_from_counts_examples():
    assert zeta_from_counts(2, 1, [3]).weil.ch == P([2, 0, 1])
    assert zeta_from_counts(2, 1, [5]).weil.ch == P([2, 2, 1])
    with pytest.raises(InvalidWeilPolynomial):
        zeta_from_counts(2, 1, [6])


def test_zeta_from_counts_extra_counts_checked():
    z = zeta_from_counts(2, 1, [3, 9, 9])
    assert z.weil.ch == P([2, 0, 1])
    with pytest.raises(InvalidWeilPolynomial, match="N_2"):
        zeta_from_counts(2, 1, [3, 10])


def test_zeta_roundtrip_from_models():
    for curve in CURATED_CURVES:
        z = zeta_data(curve)
        rebuilt = zeta_from_counts(z.q, z.g, list(z.point_counts))
        assert rebuilt.weil.ch == z.weil.ch
        # model counts beyond the reconstruction window agree
        for n in range(z.g + 1, z.g + 3):
            if curve.q ** n <= 1 << 16:
                assert brute_force_count(curve, n) == curve_point_count(z.weil, n)


def test_zeta_from_l_polynomial_roundtrip():
    z = zeta_data(ELLIPTIC_CURVES[0])
    lp = l_polynomial(z)
    assert lp == P([1, 0, 2])
    again = zeta_from_l_polynomial(z.q, lp)
    assert again.weil.ch == z.weil.ch and again.point_counts == z.point_counts


def test_zeta_data_cross_checks_descriptions():
    good = CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1), counts=(3,))
    assert zeta_data(good).weil.ch == P([2, 0, 1])
    bad = CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1), counts=(5,))
    with pytest.raises(ValueError, match="disagrees"):
        zeta_data(bad)


def test_jacobian_count_examples():
    e = CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1))
    assert jacobian_count(e, 3) == 9
    assert jacobian_count(CurveSpec(q=4, genus=0), 5) == 1
    g2 = zeta_from_counts(2, 2, [1, 9])  # ch = (T^2+2)(T^2-2T+2)
    assert jacobian_count(g2, 1) == 3
    assert g2.weil.ch == P([2, 0, 1]) * P([2, -2, 1])


def test_picard_sandwich_on_curated_curves():
    from weilcensus.weil import weil_sandwich

    for curve in CURATED_CURVES:
        z = zeta_data(curve)
        for n in range(1, 13):
            assert weil_sandwich(point_count(z.weil, n), z.q, n, z.g)
