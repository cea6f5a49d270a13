"""How the ell-part of #A(F_{q^n}) depends on n: the (gcd, valuation) law.

Run:  python demos/02_torsion_invariants.py
"""

import math

from weilcensus import IntPolynomial, validate
from weilcensus.torsion import ell_invariants, torsion_part, verify_torsion_law
from weilcensus.weil import point_count_valuation

a = validate(2, IntPolynomial([2, 0, 1]))  # T^2 + 2, the y^2 + y = x^3 Jacobian
print(f"A: {a}")
print()

# ---------------------------------------------------------------------------
# For each prime ell != 2 the roots of ch mod ell have a multiplicative
# order; h is the lcm of those orders and g_d counts roots of order
# dividing d.  The ell-part of the count then only depends on gcd(n, h)
# and v_ell(n).
# ---------------------------------------------------------------------------
for ell in (3, 5, 7):
    inv = ell_invariants(a, ell)
    print(f"ell = {ell}: h = {inv.h_ell}, g_d = {inv.g_of_d}, "
          f"empirical stabilization index = {inv.j_ell}")
    for d in sorted(inv.g_of_d):
        row = [inv.n_table[(d, j)] for j in range(4)]
        print(f"  d = {d}: N(d, j) for j = 0..3 -> {row}"
              f"   (each step multiplies by {ell}^{inv.g_of_d[d]})")
print()

# ---------------------------------------------------------------------------
# The law in action: every n <= 30 lands on its table entry.
# ---------------------------------------------------------------------------
inv3 = ell_invariants(a, 3)
report = verify_torsion_law(a, 3, 30, inv3)
print(f"verification for n <= 30 at ell = 3: {'PASS' if report.passed else 'FAIL'}")
for check in report.checks[:8]:
    print(f"  n = {check.n}: gcd = {check.d}, j = {check.j}, "
          f"3-part = {check.actual} (table says {check.expected})")
print()

# ---------------------------------------------------------------------------
# The valuation is computable for astronomically large n because the
# companion power is reduced modulo ell^K; no full count is ever formed.
# ---------------------------------------------------------------------------
for j in (5, 10, 20):
    n = 2 * 3 ** j
    v = point_count_valuation(a, 3, n)
    print(f"v_3(#A(F_2^{{{n}}})) = {v}   (law predicts 2 + 2j = {2 + 2 * j})")
print()
print(f"3-part at n = 6: {torsion_part(a, 3, 6)} "
      f"(gcd(6, {inv3.h_ell}) = {math.gcd(6, inv3.h_ell)}, j = 1)")
