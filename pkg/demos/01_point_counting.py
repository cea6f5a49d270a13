"""Point counting three ways: enumeration, companion matrices, resultants.

Run:  python demos/01_point_counting.py
"""

from weilcensus import (
    CurveModel,
    CurveSpec,
    brute_force_count,
    curve_point_count,
    make_field,
    point_count,
    zeta_data,
    zeta_from_counts,
)

# ---------------------------------------------------------------------------
# Finite fields come with a deterministic modulus: the lexicographically
# smallest monic irreducible (coefficients compared low to high degree).
# ---------------------------------------------------------------------------
for p, a in ((2, 1), (2, 2), (3, 2), (2, 8)):
    field = make_field(p, a)
    print(f"F_{p}^{a}: modulus {field.modulus}")
print()

# ---------------------------------------------------------------------------
# A supersingular elliptic curve over F_2.  Exhaustive enumeration is the
# ground truth; a single count N_1 already pins down the Weil polynomial.
# ---------------------------------------------------------------------------
curve = CurveSpec(q=2, genus=1, model=CurveModel.elliptic(a3=1),
                  label="y^2 + y = x^3 over F_2")
n1 = brute_force_count(curve, 1)
print(f"{curve.label}: N_1 = {n1} points")

zeta = zeta_from_counts(curve.q, curve.genus, [n1])
print(f"reconstructed ch = {zeta.weil.ch}")
print()

# From here every count is exact linear algebra: det(I - C^n) for the
# companion matrix C, cross-checkable against a resultant.
print(" n   enumeration   q^n+1-sum(alpha^n)   det path   resultant path")
for n in range(1, 11):
    brute = brute_force_count(curve, n)
    from_zeta = curve_point_count(zeta.weil, n)
    det_path = point_count(zeta.weil, n, "companion")
    res_path = point_count(zeta.weil, n, "resultant")
    flag = "ok" if brute == from_zeta == det_path == res_path else "MISMATCH"
    print(f"{n:2d}  {brute:12d}  {from_zeta:19d}  {det_path:9d}  {res_path:14d}  {flag}")
print()

# ---------------------------------------------------------------------------
# Genus 2: the Jacobian order (Picard group) and the curve count differ.
# y^2 + y = x^5 + x + 1 over F_2 has ch = (T^2 + 2)(T^2 - 2T + 2).
# ---------------------------------------------------------------------------
g2 = CurveSpec(q=2, genus=2,
               model=CurveModel.hyperelliptic(h=(1,), f=(1, 1, 0, 0, 0, 1)),
               label="y^2 + y = x^5 + x + 1 over F_2")
zeta2 = zeta_data(g2)
print(f"{g2.label}: ch = {zeta2.weil.ch}")
print(" n   #X(F_{2^n})   #Pic^0(F_{2^n})")
for n in range(1, 7):
    print(f"{n:2d}  {curve_point_count(zeta2.weil, n):11d}  {point_count(zeta2.weil, n):15d}")
