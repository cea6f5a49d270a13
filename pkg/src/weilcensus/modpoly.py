"""Dense polynomial arithmetic and factorization over prime fields F_p.

Polynomials are coefficient lists ascending in degree with entries reduced
into [0, p).  Factorization runs squarefree decomposition, distinct-degree
splitting, and Cantor-Zassenhaus equal-degree splitting; the random choices
come from a PRNG with a fixed default seed so runs are reproducible, and the
result is returned in a canonical sorted order.  Correctness never depends on
the seed: multiplying the factors back together is checked in the test suite.
"""

from __future__ import annotations

import random
from typing import Iterable

from .algebra import IntPolynomial, factorint, is_prime

FACTOR_SEED = 0x5EED
"""Default PRNG seed for equal-degree splitting (reproducible runs)."""


class ModPoly:
    """Polynomial over F_p; immutable, coefficients ascending in [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]):
        self.p = p
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(p: int) -> "ModPoly":
        return ModPoly(p, ())

    @staticmethod
    def one(p: int) -> "ModPoly":
        return ModPoly(p, (1,))

    @staticmethod
    def x(p: int) -> "ModPoly":
        return ModPoly(p, (0, 1))

    # -- queries ----------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(("ModPoly", self.p, self.coeffs))

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    # -- arithmetic ---------------------------------------------------------------

    def _check(self, other: "ModPoly") -> None:
        if self.p != other.p:
            raise ValueError("mixed characteristics")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return ModPoly(self.p, out)

    def __neg__(self) -> "ModPoly":
        return ModPoly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return self + (-other)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return ModPoly.zero(self.p)
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ModPoly(self.p, out)

    def scale(self, c: int) -> "ModPoly":
        return ModPoly(self.p, tuple(c * a for a in self.coeffs))

    def monic(self) -> "ModPoly":
        if self.is_zero:
            return self
        inv = pow(self.leading, self.p - 2, self.p) if self.leading != 1 else 1
        return self.scale(inv)

    def divmod(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dg = other.degree
        if self.degree < dg:
            return ModPoly.zero(p), self
        quo = [0] * (self.degree - dg + 1)
        inv_lead = pow(other.leading, p - 2, p)
        for k in range(self.degree - dg, -1, -1):
            coef = rem[dg + k] * inv_lead % p
            if coef:
                quo[k] = coef
                for i, gc in enumerate(other.coeffs):
                    rem[i + k] = (rem[i + k] - coef * gc) % p
        return ModPoly(p, quo), ModPoly(p, rem[:dg])

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return self.divmod(other)[0]

    def gcd(self, other: "ModPoly") -> "ModPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, modulus: "ModPoly") -> "ModPoly":
        """self**e reduced mod `modulus`, by binary exponentiation."""
        if e < 0:
            raise ValueError("negative exponent")
        result = ModPoly.one(self.p)
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            e >>= 1
            if e:
                base = base * base % modulus
        return result

    def derivative(self) -> "ModPoly":
        return ModPoly(self.p, tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __repr__(self) -> str:
        return f"ModPoly(p={self.p}, {list(self.coeffs)})"

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
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(reversed(parts))


def poly_mod_prime(f: IntPolynomial, ell: int) -> ModPoly:
    """Coefficientwise reduction of an integer polynomial mod a prime."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    return ModPoly(ell, f.coeffs)


def is_irreducible(f: ModPoly) -> bool:
    """Rabin's irreducibility test for a polynomial over F_p."""
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    p = f.p
    x = ModPoly.x(p)
    # x**(p**n) == x mod f, and no proper subfield absorbs the roots
    xq = x.pow_mod(p ** n, f)
    if xq != x % f:
        return False
    for r in factorint(n):
        h = x.pow_mod(p ** (n // r), f) - x
        if f.gcd(h).degree != 0:
            return False
    return True


def _pth_root(f: ModPoly) -> ModPoly:
    # f(T) = g(T**p) implies f = g**p over F_p; extract g by compressing exponents
    p = f.p
    return ModPoly(p, tuple(f.coefficient(i) for i in range(0, f.degree + 1, p)))


def squarefree_decomposition(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Monic squarefree parts with multiplicities, product recovering f/lc."""
    p = f.p
    f = f.monic()
    if f.degree <= 0:
        return []
    out: dict[int, ModPoly] = {}

    def accumulate(g: ModPoly, mult: int) -> None:
        if g.degree > 0:
            out[mult] = out[mult] * g if mult in out else g

    def recurse(g: ModPoly, scale: int) -> None:
        d = g.derivative()
        if d.is_zero:
            recurse(_pth_root(g), scale * p)
            return
        c = g.gcd(d)
        w = (g // c).monic()
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = (w // y).monic()
            accumulate(z, i * scale)
            w = y
            c = (c // y).monic()
            i += 1
        if c.degree > 0:
            recurse(_pth_root(c), scale * p)

    recurse(f, 1)
    return sorted(((g.monic(), m) for m, g in out.items()), key=lambda t: (t[1], t[0].sort_key()))


def _distinct_degree(f: ModPoly) -> list[tuple[ModPoly, int]]:
    # f monic squarefree; returns (product of irreducibles of degree d, d)
    p = f.p
    out = []
    x = ModPoly.x(p)
    h = x % f
    v = f
    d = 0
    while v.degree > 2 * (d + 1) - 1:
        d += 1
        h = h.pow_mod(p, v)
        g = v.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            v = (v // g).monic()
            h = h % v
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _equal_degree_factor(f: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    # f monic squarefree, every irreducible factor of degree exactly d
    p = f.p
    if f.degree == d:
        return [f]
    while True:
        h = ModPoly(p, [rng.randrange(p) for _ in range(f.degree)])
        if h.degree < 1:
            continue
        g = f.gcd(h)
        if 0 < g.degree < f.degree:
            break
        if p == 2:
            # trace map sum h + h^2 + ... + h^(2^(d-1))
            t = h % f
            w = t
            for _ in range(d - 1):
                t = t * t % f
                w = w + t
            g = f.gcd(w)
        else:
            w = h.pow_mod((p ** d - 1) // 2, f)
            g = f.gcd(w - ModPoly.one(p))
        if 0 < g.degree < f.degree:
            break
    left = _equal_degree_factor(g, d, rng)
    right = _equal_degree_factor((f // g).monic(), d, rng)
    return left + right


def factor(f: ModPoly, seed: int | None = None) -> list[tuple[ModPoly, int]]:
    """Complete factorization into monic irreducibles with multiplicities.

    The list is sorted by (degree, coefficients) so the output is canonical;
    the product of the factors times lc(f) reproduces f.  The seed defaults
    to the module-level FACTOR_SEED; the result does not depend on it.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(FACTOR_SEED if seed is None else seed)
    out: list[tuple[ModPoly, int]] = []
    for g, mult in squarefree_decomposition(f):
        for h, d in _distinct_degree(g):
            for irr in _equal_degree_factor(h, d, rng):
                out.append((irr.monic(), mult))
    return sorted(out, key=lambda t: t[0].sort_key())


def multiplicative_order_of_x(f: ModPoly) -> int:
    """Order of T in (F_p[T]/f)^* for irreducible f with f(0) != 0."""
    p = f.p
    d = f.degree
    if d <= 0:
        raise ValueError("need a nonconstant polynomial")
    if f.coefficient(0) == 0:
        raise ValueError("T is not invertible mod f")
    x = ModPoly.x(p)
    order = p ** d - 1
    for r in factorint(order):
        while order % r == 0 and x.pow_mod(order // r, f) == ModPoly.one(p):
            order //= r
    return order
