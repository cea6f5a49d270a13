"""Exact integer and rational linear and polynomial algebra.

Everything here is exact: dense integer polynomials with arbitrary-precision
coefficients, rational matrices over ``fractions.Fraction``, fraction-free
resultants, Bareiss determinants, and integer Smith normal form with
unimodular transforms.  No floating point enters any computation in this
module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, a) with q = p**a and p prime, or None."""
    if q < 2:
        return None
    for a in range(q.bit_length(), 0, -1):
        p = round(q ** (1.0 / a))
        for cand in (p - 1, p, p + 1):
            if cand >= 2 and cand ** a == q and is_prime(cand):
                return cand, a
    return None


def _pollard_rho(n: int) -> int:
    # n odd composite, not a prime power of a tiny prime
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to split {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorint expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    while d * d <= n and d < 1 << 20:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
            else:
                f = _pollard_rho(m)
                stack.extend((f, m // f))
    return out


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n."""
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p ** k for d in ds for k in range(e + 1)]
    return sorted(ds)


def v_ell(x: int, ell: int) -> int | float:
    """The ell-adic valuation of x: largest e with ell**e | x, math.inf for x = 0."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if x == 0:
        return math.inf
    x = abs(x)
    v = 0
    while x % ell == 0:
        x //= ell
        v += 1
    return v


def prime_to_ell_part(x: int, ell: int) -> int:
    """Strip all factors of ell from a nonzero integer."""
    if x == 0:
        raise ValueError("the prime-to-ell part of 0 is undefined")
    v = v_ell(x, ell)
    return x // ell ** v


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------

class IntPolynomial:
    """Dense univariate polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored ascending in degree; the leading coefficient is
    nonzero (the zero polynomial stores an empty tuple).  Instances are
    immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def x() -> "IntPolynomial":
        return IntPolynomial((0, 1))

    @staticmethod
    def monomial(c: int, k: int) -> "IntPolynomial":
        return IntPolynomial((0,) * k + (c,))

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    # -- arithmetic -------------------------------------------------------------

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by T**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        """Evaluate at an int or Fraction by Horner's rule (exact)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content_and_primitive(self) -> tuple[int, "IntPolynomial"]:
        """Return (content, primitive part); content carries the leading sign."""
        if self.is_zero:
            return 0, self
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        if self.coeffs[-1] < 0:
            g = -g
        return g, IntPolynomial(tuple(c // g for c in self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "T" if i == 1 else f"T^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        out = " + ".join(reversed(parts))
        return out.replace("+ -", "- ")


def pseudo_divmod(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Pseudo-division: lc(g)**(deg f - deg g + 1) * f = q*g + r with deg r < deg g."""
    if g.is_zero:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    df, dg = f.degree, g.degree
    if df < dg:
        return IntPolynomial.zero(), f
    l = g.leading
    rem = list(f.coeffs)
    quo = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        # new_rem = lc(g)*rem - coef*T^k*g, one lc(g) scaling per step
        coef = rem[dg + k]
        rem = [l * c for c in rem]
        quo = [l * c for c in quo]
        quo[k] += coef
        for i, gc in enumerate(g.coeffs):
            rem[i + k] -= coef * gc
    return IntPolynomial(quo), IntPolynomial(rem[:dg] if dg > 0 else [])


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Gcd in Q[T], returned as a primitive integer polynomial with positive lead.

    Uses the primitive polynomial remainder sequence, so every step is exact.
    """
    a, b = f, g
    if a.degree < b.degree:
        a, b = b, a
    if b.is_zero:
        if a.is_zero:
            return a
        _, prim = a.content_and_primitive()
        return prim if prim.leading > 0 else -prim
    _, a = a.content_and_primitive()
    _, b = b.content_and_primitive()
    while not b.is_zero:
        _, r = pseudo_divmod(a, b)
        a, b = b, r
        if not b.is_zero:
            _, b = b.content_and_primitive()
    return a if a.leading > 0 else -a


def poly_exact_div(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Exact quotient f/g for g | f in Q[T]; raises when the division is inexact."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in f.coeffs]
    dg = g.degree
    df = f.degree
    if df < dg:
        if f.is_zero:
            return f
        raise ArithmeticError("inexact polynomial division")
    quo = [Fraction(0)] * (df - dg + 1)
    lead = Fraction(g.leading)
    for k in range(df - dg, -1, -1):
        coef = rem[dg + k] / lead
        quo[k] = coef
        for i, gc in enumerate(g.coeffs):
            rem[i + k] -= coef * gc
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    if any(c.denominator != 1 for c in quo):
        raise ArithmeticError("quotient is not an integer polynomial")
    return IntPolynomial(tuple(int(c) for c in quo))


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """The radical of f over Q (product of its distinct irreducible factors)."""
    if f.degree <= 0:
        return f
    return poly_exact_div(f, poly_gcd(f, f.derivative()))


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    """The (deg f + deg g)-square Sylvester matrix of f and g."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        raise ValueError("Sylvester matrix needs nonzero polynomials")
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g), computed exactly by the fraction-free subresultant PRS.

    For monic f this equals the product of g over the roots of f (with
    multiplicity).  The zero polynomial f is rejected; Res(f, 0) is 0 for
    deg f >= 1 and 1 for constant f.
    """
    if f.is_zero:
        raise ValueError("undefined resultant: first argument is the zero polynomial")
    if g.is_zero:
        return 0 if f.degree >= 1 else 1
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    sign = 1
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2 == 1:
            sign = -sign
        a, b = b, a
    ca, a = a.content_and_primitive()
    cb, b = b.content_and_primitive()
    scale = ca ** b.degree * cb ** a.degree
    g_, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
        _, r = pseudo_divmod(a, b)
        a = b
        if r.is_zero:
            return 0  # deg a >= 1 here, so f and g share a factor
        denom = g_ * h ** delta
        b = IntPolynomial(tuple(c // denom for c in r.coeffs))
        g_ = a.leading
        h = g_ ** delta // h ** (delta - 1) if delta > 0 else h
        if b.degree <= 0:
            break
    da = a.degree
    res = b.coeffs[0] ** da // h ** (da - 1)
    return sign * scale * res


def companion_matrix(f: IntPolynomial) -> list[list[int]]:
    """Companion matrix of a monic polynomial (empty for degree 0)."""
    if not f.is_monic:
        raise ValueError("companion matrix requires a monic polynomial")
    n = f.degree
    mat = [[0] * n for _ in range(n)]
    for i in range(1, n):
        mat[i][i - 1] = 1
    for i in range(n):
        mat[i][n - 1] = -f.coeffs[i]
    return mat


# ---------------------------------------------------------------------------
# dense integer matrices (small, exact)
# ---------------------------------------------------------------------------

def mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], mod: int | None = None) -> list[list[int]]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] += c * bt[j]
        if mod is not None:
            for j in range(m):
                oi[j] %= mod
    return out


def mat_sub(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_pow(a: Sequence[Sequence[int]], e: int, mod: int | None = None) -> list[list[int]]:
    """a**e by binary exponentiation, exactly or modulo `mod`."""
    if e < 0:
        raise ValueError("negative matrix power")
    n = len(a)
    result = mat_identity(n)
    base = [list(row) for row in a]
    if mod is not None:
        base = [[x % mod for x in row] for row in base]
    while e:
        if e & 1:
            result = mat_mul(result, base, mod)
        e >>= 1
        if e:
            base = mat_mul(base, base, mod)
    return result


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    """left . A . right = diag(diag), with unimodular left and right."""

    diag: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    def recompose(self) -> list[list[int]]:
        """The diagonal matrix left . A . right, shaped like the input."""
        m, n = len(self.left), len(self.right)
        out = [[0] * n for _ in range(m)]
        for i, d in enumerate(self.diag):
            out[i][i] = d
        return out


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form with transforms: d_1 | d_2 | ... and unimodular L, R."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    left = mat_identity(m)
    right = mat_identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + c * y for x, y in zip(left[dst], left[src])]

    def addmul_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in right:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    t = 0
    size = min(m, n)
    while t < size:
        # move a nonzero entry of smallest magnitude into the pivot slot
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            if a[t][t] < 0:
                negate_row(t)
            restart = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)  # strictly smaller pivot
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # enforce that the pivot divides the remaining block
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, 1)
        t += 1
    diag = tuple(a[i][i] for i in range(size))
    return SmithForm(
        diag=diag,
        left=tuple(tuple(row) for row in left),
        right=tuple(tuple(row) for row in right),
    )


# ---------------------------------------------------------------------------
# rational matrices
# ---------------------------------------------------------------------------

class RatMatrix:
    """Dense matrix over Q with exact rank, solve, and nullspace."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(x) for x in row) for row in rows
        )
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def _rref(self) -> tuple[list[list[Fraction]], list[int]]:
        m, n = self.shape
        a = [list(row) for row in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(n):
            pr = next((i for i in range(r, m) if a[i][c] != 0), None)
            if pr is None:
                continue
            a[r], a[pr] = a[pr], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(m):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == m:
                break
        return a, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def solve(self, rhs: Sequence) -> list[Fraction]:
        """One exact solution of A x = rhs; raises ValueError if inconsistent."""
        m, n = self.shape
        b = [Fraction(x) for x in rhs]
        if len(b) != m:
            raise ValueError("dimension mismatch")
        aug = RatMatrix([list(row) + [b[i]] for i, row in enumerate(self.rows)])
        red, pivots = aug._rref()
        if n in pivots:
            raise ValueError("inconsistent linear system")
        x = [Fraction(0)] * n
        for r, c in enumerate(pivots):
            x[c] = red[r][n]
        return x

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the right kernel."""
        m, n = self.shape
        red, pivots = self._rref()
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * n
            vec[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -red[r][fc]
            basis.append(vec)
        return basis

    def mul(self, other: "RatMatrix") -> "RatMatrix":
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError("dimension mismatch")
        return RatMatrix(
            [
                [sum((self.rows[i][t] * other.rows[t][j] for t in range(k)), Fraction(0)) for j in range(n)]
                for i in range(m)
            ]
        )

    def __repr__(self) -> str:
        return f"RatMatrix({[list(map(str, r)) for r in self.rows]})"
